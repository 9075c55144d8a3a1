#ifndef GROUPCHAR_COMPLEX_HPP
#define GROUPCHAR_COMPLEX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "groupchar/action_groupoid.hpp"
#include "groupchar/linalg.hpp"
#include "groupchar/presented.hpp"

namespace groupchar {

inline constexpr std::size_t kDefaultMaxRows = 5'000'000;

/// A character space at level 0, 1 or 2. Level 0 lives on object
/// coordinates, level 1 on morphism (or edge) coordinates. Level 2 reuses
/// the level-1 coordinates: a 2-character is stored as its canonical level-1
/// representative modulo the trivial-on-loops subspace (the value of the
/// 2-character on a cell (phi, psi) is rep(psi) - rep(phi)).
struct CharacterSpace {
    int level = 0;
    std::vector<std::string> coordinates;
    Subspace space;
};

/// Linear realization of a boundary map on the ambient coordinate spaces.
/// Level 0: the all-ones column. Level 1: per level-1 coordinate, +1 at its
/// target object, -1 at its source object. Level 2: the projection of the
/// level-1 ambient space onto the canonical complement of the
/// trivial-on-loops subspace (the quotient coordinates of X2).
struct BoundaryMap {
    int from_level = 0;
    int to_level = 0;
    SparseMatrix matrix;
};

struct ExactnessPosition {
    std::string name;  // e.g. "X0->X1"
    std::size_t image_dim = 0;
    std::size_t kernel_dim = 0;
    bool equal = false;
};

struct ComponentExactness {
    std::size_t component = 0;
    std::size_t object_count = 0;
    std::size_t x0_dim = 0, x1_dim = 0, x2_dim = 0;
    std::vector<ExactnessPosition> positions;
    bool exact = false;
};

struct ExactnessReport {
    std::size_t x0_dim = 0, x1_dim = 0, x2_dim = 0;
    std::vector<ComponentExactness> components;
    // Full-groupoid defect at X0: ker phi_1 minus the constants. Equals
    // #components - 1; zero exactly for connected sources.
    std::size_t defect_dim_x0 = 0;
    bool all_components_exact = false;
};

// --- action groupoid instances ---------------------------------------------

// Additivity constraint rows, one per composable morphism pair; the kernel
// is X1. Throws SizeLimitError past max_rows.
SparseMatrix x1_constraint_matrix(const ActionGroupoid& g,
                                  std::size_t max_rows = kDefaultMaxRows);
// Indicator rows, one per loop morphism (v a, v) with v in Z_G(a).
SparseMatrix loop_matrix(const ActionGroupoid& g);

CharacterSpace x0_space(const ActionGroupoid& g);
CharacterSpace x1_space(const ActionGroupoid& g, std::size_t max_rows = kDefaultMaxRows);
CharacterSpace x2_space(const ActionGroupoid& g, std::size_t max_rows = kDefaultMaxRows);

BoundaryMap boundary(int level, const ActionGroupoid& g,
                     std::size_t max_rows = kDefaultMaxRows);

bool is_trivial_on_loops(const Vec& chi, const ActionGroupoid& g);

ExactnessReport verify_exactness(const ActionGroupoid& g,
                                 std::size_t max_rows = kDefaultMaxRows);

// Canonical representative of the class of c modulo trivial-on-loops
// characters: vanishes on the canonical morphism choice between every
// ordered object pair of each component. c must be a 1-character.
Vec lift_two_character(const ActionGroupoid& g, const Vec& c,
                       std::size_t max_rows = kDefaultMaxRows);

// --- presented groupoid instances -------------------------------------------

CharacterSpace x0_space(const PresentedGroupoid& g);
CharacterSpace x1_space(const PresentedGroupoid& g);
CharacterSpace x2_space(const PresentedGroupoid& g);

BoundaryMap boundary(int level, const PresentedGroupoid& g);

bool is_trivial_on_loops(const Vec& chi, const PresentedGroupoid& g);

ExactnessReport verify_exactness(const PresentedGroupoid& g);

// Canonical representative vanishing on the spanning forest.
Vec lift_two_character(const PresentedGroupoid& g, const Vec& c);

}  // namespace groupchar

#endif
