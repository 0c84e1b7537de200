#ifndef DJCM_BASIS_HPP
#define DJCM_BASIS_HPP

#include "djcm/half_int.hpp"

namespace djcm {

/// The pair of degenerate level angular momenta. Level b is the upper
/// level, level c the lower one.
struct LevelSpec {
    HalfInt Jb, Jc;

    int dim_b() const { return Jb.twice() + 1; } // 2Jb + 1
    int dim_c() const { return Jc.twice() + 1; }
    int atom_dim() const { return dim_b() + dim_c(); }
};

enum class Level { B, C };

struct AtomState {
    Level level;
    HalfInt m;
};

/// Index bookkeeping for the product basis |level, m> (x) |n>.
///
/// Ordering, fixed here and nowhere else: atomic states run level b with m
/// ascending, then level c with m ascending; the photon number n is the
/// fast index. Flat index = atom * cutoff + n. Partial traces and operator
/// embeddings all derive from this class.
class BasisLayout {
public:
    BasisLayout(LevelSpec levels, int cutoff);

    const LevelSpec& levels() const { return levels_; }
    int cutoff() const { return cutoff_; }
    int atom_dim() const { return levels_.atom_dim(); }
    int dim() const { return levels_.atom_dim() * cutoff_; }

    int atom_index(Level level, HalfInt m) const; // throws InvalidInput when out of range
    AtomState atom_state(int atom) const;
    int index(int atom, int n) const { return atom * cutoff_ + n; }

private:
    LevelSpec levels_;
    int cutoff_;
};

} // namespace djcm

#endif
