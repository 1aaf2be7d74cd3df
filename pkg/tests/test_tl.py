import itertools
import random

import pytest

from skeinalg.errors import ContractViolation, ValidationError
from skeinalg.laurent import LaurentPoly
from skeinalg.tl import (AnnularClass, TLDiagram, annulus_closure_eval,
                         catalan, crossing_resolution, delta,
                         diagram_from_pairs, plane_closure, tl_basis, tl_cap,
                         tl_compose, tl_cup, tl_e, tl_from_diagram,
                         tl_identity, tl_tensor, tl_zero)


def P(d):
    return LaurentPoly.from_dict(d)


def all_matchings(points):
    """Brute-force oracle: every perfect matching as a frozenset of pairs."""
    if not points:
        yield frozenset()
        return
    first, rest = points[0], points[1:]
    for k, other in enumerate(rest):
        for sub in all_matchings(rest[:k] + rest[k + 1:]):
            yield sub | {frozenset((first, other))}


def crossing_free(matching):
    for p, q in itertools.combinations(matching, 2):
        a, b = sorted(p)
        c, d = sorted(q)
        if a < c < b < d or c < a < d < b:
            return False
    return True


@pytest.mark.parametrize("nb,nt", [(1, 1), (2, 0), (0, 2), (2, 2), (3, 3),
                                   (4, 2), (5, 1), (0, 0)])
def test_basis_matches_bruteforce(nb, nt):
    """Enumerate all matchings, filter the planar ones, compare."""
    n = nb + nt
    planar = [m for m in all_matchings(tuple(range(n))) if crossing_free(m)]
    got = tl_basis(nb, nt)
    assert len(got) == len(planar)
    got_sets = {frozenset(frozenset((i, d.mate[i])) for i in range(n)
                          if d.mate[i] > i) for d in got}
    assert got_sets == set(planar)


def test_basis_counts_are_catalan():
    assert len(tl_basis(1, 1)) == 1
    assert len(tl_basis(2, 0)) == 1
    assert len(tl_basis(3, 3)) == 5
    assert [catalan(k) for k in range(6)] == [1, 1, 2, 5, 14, 42]
    for nb in range(0, 6):
        for nt in range(0, 6):
            want = catalan((nb + nt) // 2) if (nb + nt) % 2 == 0 else 0
            assert len(tl_basis(nb, nt)) == want


def test_odd_total_gives_empty_homspace():
    assert tl_basis(2, 1) == []
    assert tl_zero(2, 1).is_zero


def test_diagram_validation():
    with pytest.raises(ValidationError):
        TLDiagram(2, 2, (2, 3, 0, 1))  # crossing matching
    with pytest.raises(ValidationError):
        TLDiagram(2, 0, (0, 1))  # not an involution without fixed points


def test_diagram_from_pairs_roundtrip():
    d = diagram_from_pairs(2, 2, [(("bottom", 0), ("bottom", 1)),
                                  (("top", 0), ("top", 1))])
    assert set(map(frozenset, d.pairs())) == {
        frozenset({("bottom", 0), ("bottom", 1)}),
        frozenset({("top", 0), ("top", 1)})}


def test_compose_e_squared():
    e = tl_e(2, 0)
    assert tl_compose(e, e) == e.scaled(delta())


def test_compose_identity_neutral():
    rng = random.Random(61)
    for _ in range(5):
        diagrams = tl_basis(3, 3)
        f = tl_from_diagram(rng.choice(diagrams),
                            P({rng.randint(-2, 2): rng.randint(1, 3)}))
        assert tl_compose(tl_identity(3), f) == f
        assert tl_compose(f, tl_identity(3)) == f


def test_compose_cap_cup_closed_loop():
    got = tl_compose(tl_cup(), tl_cap())  # cup then cap: a free circle
    assert got.n_bottom == 0 and got.n_top == 0
    (coeff,) = got.terms.values()
    assert coeff == delta()


def test_compose_width_mismatch():
    with pytest.raises(ContractViolation):
        tl_compose(tl_identity(2), tl_identity(3))


def test_tensor_identities():
    assert tl_tensor(tl_identity(1), tl_identity(1)) == tl_identity(2)
    e1 = tl_tensor(tl_e(2, 0), tl_identity(1))
    assert e1 == tl_e(3, 0)


def test_tensor_bilinearity():
    rng = random.Random(67)
    basis22 = tl_basis(2, 2)
    for _ in range(5):
        d1, d2, d3 = (rng.choice(basis22) for _ in range(3))
        c1, c2, c3 = (P({rng.randint(-2, 2): rng.randint(-3, 3) or 1})
                      for _ in range(3))
        f = tl_from_diagram(d1, c1) + tl_from_diagram(d2, c2)
        g = tl_from_diagram(d3, c3)
        lhs = tl_tensor(f, g)
        rhs = tl_tensor(tl_from_diagram(d1, c1), g) + \
            tl_tensor(tl_from_diagram(d2, c2), g)
        assert lhs == rhs


def test_interchange_law():
    rng = random.Random(71)
    basis = tl_basis(2, 2)
    for _ in range(8):
        f, fp, g, gp = (tl_from_diagram(rng.choice(basis),
                                        P({rng.randint(-1, 1): 1}))
                        for _ in range(4))
        lhs = tl_compose(tl_tensor(f, g), tl_tensor(fp, gp))
        rhs = tl_tensor(tl_compose(f, fp), tl_compose(g, gp))
        assert lhs == rhs


@pytest.mark.parametrize("n", range(2, 6))
def test_tl_relations(n):
    d = delta()
    for i in range(n - 1):
        e = tl_e(n, i)
        assert tl_compose(e, e) == e.scaled(d)
        if i + 1 <= n - 2:
            f = tl_e(n, i + 1)
            assert tl_compose(tl_compose(e, f), e) == e
            assert tl_compose(tl_compose(f, e), f) == f
        for j in range(i + 2, n - 1):
            f = tl_e(n, j)
            assert tl_compose(e, f) == tl_compose(f, e)


def test_crossing_coefficients():
    pos = crossing_resolution(1)
    ident = tl_identity(2)
    e = tl_e(2, 0)
    (id_diag,) = ident.terms
    (e_diag,) = e.terms
    assert pos.coefficient(id_diag) == P({1: 1})
    assert pos.coefficient(e_diag) == P({-1: 1})


def test_crossing_mirror_symmetry():
    pos, neg = crossing_resolution(1), crossing_resolution(-1)
    for diag, coeff in pos.terms.items():
        assert neg.coefficient(diag) == coeff.mirrored()


def test_reidemeister_two():
    assert tl_compose(crossing_resolution(1), crossing_resolution(-1)) == \
        tl_identity(2)


def test_plane_closure_examples():
    d = delta()
    assert plane_closure(tl_identity(2)) == d * d
    assert plane_closure(tl_e(2, 0)) == d
    # closure of a single positive crossing is a one-curl unknot
    got = plane_closure(crossing_resolution(1))
    assert got == P({1: 1}) * d * d + P({-1: 1}) * d
    assert got == P({3: -1}) * d  # = -A^3 * delta after simplification
    assert plane_closure(tl_identity(0)) == 1


def test_annulus_id1_is_core():
    assert annulus_closure_eval(tl_identity(1)) == AnnularClass({1: 1})


def test_annulus_e_is_contractible():
    assert annulus_closure_eval(tl_e(2, 0)) == AnnularClass({0: delta()})


def test_annulus_idn_powers():
    for n in range(0, 6):
        assert annulus_closure_eval(tl_identity(n)) == AnnularClass({n: 1})


def test_annulus_linear_over_terms():
    m = crossing_resolution(1)
    got = annulus_closure_eval(m)
    assert got == AnnularClass({2: P({1: 1}), 0: P({-1: 1}) * delta()})


def test_annular_class_arithmetic():
    z = AnnularClass({1: 1})
    assert z * z == AnnularClass({2: 1})
    assert (z + z) * z == AnnularClass({2: 2})
    assert AnnularClass({0: delta()}) * z == AnnularClass({1: delta()})


def test_closures_need_square_morphisms():
    with pytest.raises(ContractViolation):
        annulus_closure_eval(tl_cup())
    with pytest.raises(ContractViolation):
        plane_closure(tl_cap())
