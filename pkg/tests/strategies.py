"""Hypothesis strategies for small exact linear maps."""

from hypothesis import strategies as st

from lrsmash.linfield import GF, BasedSpace, LinMap, Q

FIELDS = [Q, GF(5), GF(2)]
SPACES = [BasedSpace("U", ("u0",)), BasedSpace("V", ("v0", "v1")),
          BasedSpace("W", ("w0", "w1", "w2"))]

fields = st.sampled_from(FIELDS)
spaces = st.sampled_from(SPACES)


def scalars(field):
    if field.p:
        return st.integers(0, field.p - 1)
    return st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def linmaps(draw, field=None, domain=None, codomain=None):
    f = field if field is not None else draw(fields)
    dom = domain if domain is not None else draw(spaces)
    cod = codomain if codomain is not None else draw(spaces)
    vals = draw(st.lists(scalars(f), min_size=dom.dim * cod.dim, max_size=dom.dim * cod.dim))
    m = f.array(vals).reshape(cod.dim, dom.dim)
    return LinMap(f, dom, cod, m)
