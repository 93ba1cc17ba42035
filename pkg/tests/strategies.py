from hypothesis import strategies as st

from ordcalc.core import atom, normalize, ordinal
from ordcalc.sequence import Explicit, Repeat, SeqDesc
from ordcalc.syntax import parse_ordinal


def _cnf(exponents, coef_max):
    pairs = st.lists(st.tuples(exponents, st.integers(1, coef_max)), max_size=4)
    return pairs.map(lambda ps: normalize(sorted(dict(ps).items(), key=lambda p: p[0], reverse=True)))


small_exponents = st.integers(0, 3).map(ordinal)
ordinals = _cnf(small_exponents, 6)  # below w^4
deep_ordinals = _cnf(_cnf(st.integers(0, 2).map(ordinal), 4), 6)  # below w^(w^3)
atoms = st.integers(1, 2).map(atom)
with_atoms = st.one_of(
    ordinals,
    st.tuples(atoms, ordinals).map(lambda p: normalize([(p[0], 1)]) if not p[1] else normalize([(p[0], 1), (ordinal(0), 1)])),
)
nonzero = ordinals.filter(bool)

LENGTHS = ["1", "2", "3", "w", "w+1", "w+2", "w*2", "w*2+1", "w^2", "w^2+w"]
lengths = st.sampled_from(LENGTHS).map(parse_ordinal)

segments = st.one_of(
    st.lists(ordinals, min_size=1, max_size=3).map(Explicit),
    st.builds(Repeat, ordinals, lengths),
)
sequences = st.lists(segments, min_size=1, max_size=4).map(SeqDesc)
