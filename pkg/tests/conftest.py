from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

from pastrev import GF, QQ, Matrix, Vector

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fracs = st.fractions(min_value=-20, max_value=20, max_denominator=9)


def vectors(n, field=QQ):
    elems = small_fracs if field.kind == "rational" else st.integers(0, field.modulus - 1)
    return st.lists(elems, min_size=n, max_size=n).map(lambda xs: Vector(field, xs))


def any_vector(max_n=7, field=QQ):
    return st.integers(0, max_n).flatmap(lambda n: vectors(n, field))


def matrices(rows, cols, field=QQ):
    elems = small_fracs if field.kind == "rational" else st.integers(0, field.modulus - 1)
    return st.lists(st.lists(elems, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(
        lambda rs: Matrix(field, rs, cols))


def any_matrix(max_n=4, max_m=4, field=QQ):
    return st.tuples(st.integers(1, max_n), st.integers(1, max_m)).flatmap(lambda s: matrices(*s, field))


def square(max_n=4, field=QQ):
    return st.integers(1, max_n).flatmap(lambda n: matrices(n, n, field))


FIELDS = [QQ, GF(3), GF(5), GF(7)]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
