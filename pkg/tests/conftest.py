import pytest

from morsepow import (
    Monomial,
    Variables,
    order_generators,
    parse_generators,
)


def ideal(texts, var_names=None):
    variables = Variables(var_names) if var_names else None
    return parse_generators(texts, variables)


def path_complement_ideal(q):
    """Generators over q+1 variables whose complement facets form the
    path {v_1,v_2}, {v_2,v_3}, ..., {v_q, v_q+1}: generator i is the
    product of every variable except v_i and v_i+1."""
    names = [chr(ord("a") + i) for i in range(q + 1)]
    variables = Variables(names)
    gens = [
        Monomial.from_dict({v: 1 for v in range(q + 1) if v not in (i, i + 1)})
        for i in range(q)
    ]
    return gens, variables


@pytest.fixture(scope="session")
def running():
    """The four-variable example (xy, yz, zu)."""
    gens, variables = ideal(["x*y", "y*z", "z*u"])
    return order_generators(gens, variables)


@pytest.fixture(scope="session")
def path4():
    """Four generators whose complement facets form a path on five
    vertices: (zuv, xuv, xyv, xyz)."""
    gens, variables = ideal(["z*u*v", "x*u*v", "x*y*v", "x*y*z"], "xyzuv")
    return order_generators(gens, variables)


@pytest.fixture(scope="session")
def star3():
    """Three generators whose complement facets are disjoint vertices;
    every joint is the first facet (a star tree)."""
    gens, variables = ideal(["c*d", "a*d", "a*c"])
    return order_generators(gens, variables)


@pytest.fixture(scope="session")
def pair2():
    gens, variables = ideal(["x*y", "y*z"])
    return order_generators(gens, variables)


@pytest.fixture(scope="session")
def single():
    gens, variables = ideal(["x*y*z"])
    return order_generators(gens, variables)


@pytest.fixture(scope="session")
def tetra_gens():
    """Not projective dimension one: complement facets form the boundary
    of a tetrahedron."""
    return ideal(["x*a", "x*b", "x*c", "x*d"])
