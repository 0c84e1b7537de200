#include "djcm/basis.hpp"

#include "djcm/errors.hpp"

namespace djcm {

BasisLayout::BasisLayout(LevelSpec levels, int cutoff)
    : levels_(levels), cutoff_(cutoff) {
    if (levels.Jb.twice() < 0 || levels.Jc.twice() < 0)
        throw InvalidInput("basis: negative angular momentum");
    if (levels.atom_dim() < 2)
        throw InvalidInput("basis: atomic dimension must be at least 2");
    if (cutoff < 2)
        throw InvalidInput("basis: Fock cutoff must be at least 2");
}

int BasisLayout::atom_index(Level level, HalfInt m) const {
    const HalfInt j = (level == Level::B) ? levels_.Jb : levels_.Jc;
    if (!m.is_projection_of(j))
        throw InvalidInput("basis: m = " + m.str() + " is not a projection of j = " + j.str());
    const int offset = (level == Level::B) ? 0 : levels_.dim_b();
    return offset + (m.twice() + j.twice()) / 2;
}

AtomState BasisLayout::atom_state(int atom) const {
    if (atom < 0 || atom >= atom_dim())
        throw InvalidInput("basis: atomic index out of range");
    if (atom < levels_.dim_b())
        return {Level::B, HalfInt::from_twice(-levels_.Jb.twice() + 2 * atom)};
    const int k = atom - levels_.dim_b();
    return {Level::C, HalfInt::from_twice(-levels_.Jc.twice() + 2 * k)};
}

} // namespace djcm
