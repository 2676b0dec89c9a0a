from hypothesis import settings, strategies as st

from qcyclic.monomial import Monomial, SpectralParam

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

orbits = st.sampled_from(["c", "d"])


@st.composite
def params(draw, orbit=None, lo=-6, hi=8, kmax=0):
    o = orbit if orbit is not None else draw(orbits)
    return SpectralParam(o, draw(st.integers(lo, hi)), draw(st.integers(0, kmax)))


@st.composite
def monomials(draw, nodes=(1,), orbit=None, lo=-6, hi=8, kmax=0, dominant=False, max_size=5):
    keys = draw(
        st.lists(
            st.tuples(st.sampled_from(nodes), params(orbit=orbit, lo=lo, hi=hi, kmax=kmax)),
            max_size=max_size,
            unique=True,
        )
    )
    exps = st.integers(1, 3) if dominant else st.integers(-3, 3).filter(bool)
    return Monomial({key: draw(exps) for key in keys})


def sl2_dominant(lo=0, hi=6, max_size=3):
    return monomials(orbit="c", lo=lo, hi=hi, dominant=True, max_size=max_size)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
