"""Named invariant suites behind the selftest subcommand.

Each check raises SelfTestFailure with a specific message on failure.
The quick level keeps everything at toy scale (dims <= 2, braids <= 4
crossings) and runs in seconds; the full level runs the whole invariant
catalogue at verification scale.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import (conjugation_hom, compose_homs, matrix_algebra)
from .bimodule import (annihilator_left, bimodule_iso_pointed,
                       bimodule_iso_unpointed, conjugator_between,
                       end_morphism, modulate, regular_bimodule, tensor_over)
from .errors import SkeinalgError
from .laurent import LaurentPoly
from .linalg import (Matrix, kernel_basis, quotient_basis, rank, rref)
from .samples import (random_braid, random_closed_word,
                      random_composable_hom_pair, random_fraction,
                      random_hom_pair, random_invertible, random_matrix,
                      random_system)
from .tangles import (braid_to_slices, closed_braid_tangle, coupon,
                      insert_slices, interpret_tangle, kauffman_bracket,
                      kink_slices, ribbon_axiom_checks, tangle)
from .tl import (annulus_closure_eval, catalan, crossing_resolution, delta,
                 plane_closure, tl_basis, tl_compose, tl_e, tl_identity,
                 tl_tensor)
from .tqft1d import compare_pictures, eval_schrodinger, make_word


class SelfTestFailure(SkeinalgError):
    pass


def _fail(msg):
    raise SelfTestFailure(msg)


def _sizes(full):
    return {
        "systems": 60 if full else 10,
        "hom_pairs": 40 if full else 8,
        "braid_moves": 120 if full else 20,
        "max_crossings": 6 if full else 4,
        "max_strands": 4 if full else 3,
        "dim": 3 if full else 2,
        "tl_n": 5 if full else 4,
    }


# -- exact linear algebra -----------------------------------------------------


def check_rank_nullity(full, rng):
    for _ in range(20 if full else 6):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
        if rank(m) + len(kernel_basis(m)) != m.cols:
            _fail("rank(m) + dim ker(m) != cols(m)")


def check_rref_idempotent(full, rng):
    for _ in range(10 if full else 4):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
        r = rref(m).matrix
        if rref(r).matrix != r:
            _fail("rref is not idempotent")


def check_laurent_ring_axioms(full, rng):
    def rand_poly():
        return LaurentPoly.from_dict(
            {rng.randint(-6, 6): rng.randint(-4, 4) for _ in range(4)})
    for _ in range(40 if full else 10):
        p, q, r = rand_poly(), rand_poly(), rand_poly()
        if p * q != q * p:
            _fail("Laurent multiplication is not commutative")
        if (p * q) * r != p * (q * r):
            _fail("Laurent multiplication is not associative")
        if p * (q + r) != p * q + p * r:
            _fail("Laurent multiplication is not distributive")


def check_quotient_projection(full, rng):
    for _ in range(12 if full else 4):
        amb = rng.randint(1, 6)
        rels = [tuple(random_fraction(rng) for _ in range(amb))
                for _ in range(rng.randint(0, amb))]
        reps, proj = quotient_basis(amb, rels)
        for r in rels:
            if any(proj.apply(r)):
                _fail("projection does not annihilate a relation")
        rel_rank = rank(Matrix.from_rows(rels)) if rels else 0
        if rank(proj) != amb - rel_rank:
            _fail("projection rank != ambient - rank(relations)")


# -- algebras and bimodules ---------------------------------------------------


def check_modulation_functoriality(full, rng):
    for _ in range(12 if full else 4):
        f, g = random_composable_hom_pair(rng, max_dim=4 if full else 2)
        comp = tensor_over(modulate(f), modulate(g))
        direct = modulate(compose_homs(g, f))
        if bimodule_iso_pointed(comp, direct) is None:
            _fail("modulation tensor composite not isomorphic to the "
                  "modulation of the composite")


def check_tensor_unit_laws(full, rng):
    for _ in range(8 if full else 3):
        n = rng.randint(1, 3 if full else 2)
        u = random_invertible(rng, n)
        m = end_morphism(u)
        alg = matrix_algebra(n)
        for t in (tensor_over(regular_bimodule(alg), m),
                  tensor_over(m, regular_bimodule(alg))):
            if bimodule_iso_pointed(t, m) is None:
                _fail("tensor with the regular bimodule is not the identity")


def check_conjugation_agreement(full, rng):
    for _ in range(_sizes(full)["hom_pairs"]):
        f, g = random_hom_pair(rng, max_dim=4 if full else 3)
        direct = conjugator_between(f, g) is not None
        via_bimodules = bimodule_iso_unpointed(modulate(f), modulate(g)) is not None
        if direct != via_bimodules:
            _fail("conjugator existence disagrees with the unpointed "
                  "bimodule isomorphism test")


def check_projectivity(full, rng):
    for _ in range(10 if full else 4):
        n = rng.randint(2, _sizes(full)["dim"])
        u = random_invertible(rng, n)
        lam = Fraction(rng.choice([-3, -2, 2, 3, 5]))
        if conjugation_hom(n, u.scale(lam)) != conjugation_hom(n, u):
            _fail("conjugation by a rescaled unit differs")
        v = tuple(rng.randint(-3, 3) for _ in range(n))
        if annihilator_left(n, v) != annihilator_left(n, tuple(lam * x for x in v)):
            _fail("annihilator is not scale-invariant")


# -- one-dimensional theories -------------------------------------------------


def check_picture_equivalence(full, rng):
    sizes = _sizes(full)
    for k in range(sizes["systems"]):
        sys = random_system(rng, max_dim=sizes["dim"],
                            singular_step=(k % 3 == 0))
        word = random_closed_word(rng)
        rep = compare_pictures(sys, word)
        if not rep.agree:
            _fail(f"pictures disagree: {rep.schrodinger_value} vs "
                  f"{rep.heisenberg_value}")


def check_group_law(full, rng):
    for _ in range(6 if full else 2):
        sys = random_system(rng, max_dim=_sizes(full)["dim"])
        s, t = rng.randint(1, 3), rng.randint(1, 3)
        w1 = make_word((("u", s), ("u", t)))
        w2 = make_word((("u", s + t),))
        if eval_schrodinger(sys, w1) != eval_schrodinger(sys, w2):
            _fail("group law fails in the Schrodinger picture")
        rep1 = compare_pictures(
            sys, make_word((("w", "0"), ("u", s), ("u", t), ("v", "0"))))
        rep2 = compare_pictures(
            sys, make_word((("w", "0"), ("u", s + t), ("v", "0"))))
        if not (rep1.agree and rep2.agree
                and rep1.schrodinger_value == rep2.schrodinger_value):
            _fail("group law fails inside a closed word")


def check_split_functoriality(full, rng):
    from .tqft1d import SpacetimeWord, eval_heisenberg
    for _ in range(6 if full else 2):
        sys = random_system(rng, max_dim=_sizes(full)["dim"])
        word = random_closed_word(rng, max_len=5)
        k = rng.randint(1, len(word.gens) - 1)
        left = SpacetimeWord(word.gens[:k])
        right = SpacetimeWord(word.gens[k:])
        whole = eval_schrodinger(sys, word)
        if whole != eval_schrodinger(sys, left) @ eval_schrodinger(sys, right):
            _fail("Schrodinger evaluation is not functorial under splits")
        h = tensor_over(eval_heisenberg(sys, left), eval_heisenberg(sys, right),
                        max_dim=sys.dim_v ** 2)
        if bimodule_iso_pointed(h, eval_heisenberg(sys, word)) is None:
            _fail("Heisenberg evaluation is not functorial under splits")


def check_projective_rescaling(full, rng):
    from .tqft1d import make_system
    for _ in range(5 if full else 2):
        sys = random_system(rng, max_dim=_sizes(full)["dim"])
        word = random_closed_word(rng)
        lam_step, lam_v, lam_w = (Fraction(rng.choice([-3, -2, 2, 3]))
                                  for _ in range(3))
        scaled = make_system(
            sys.dim_v, sys.step.scale(lam_step),
            {k: tuple(lam_v * x for x in v) for k, v in sys.states.items()},
            {k: tuple(lam_w * x for x in v) for k, v in sys.costates.items()},
            sys.observables)
        expected = Fraction(1)
        for kind, arg in word.gens:
            if kind == "u":
                expected *= lam_step ** arg
            elif kind == "v":
                expected *= lam_v
            elif kind == "w":
                expected *= lam_w
        base = compare_pictures(sys, word)
        got = compare_pictures(scaled, word)
        if not (base.agree and got.agree
                and got.schrodinger_value == expected * base.schrodinger_value):
            _fail("closed-word scalar does not rescale projectively")


def check_tensor_associativity(full, rng):
    for _ in range(5 if full else 2):
        n = rng.randint(1, 2)
        ms = [end_morphism(random_matrix(rng, n, n)) for _ in range(3)]
        left = tensor_over(tensor_over(ms[0], ms[1]), ms[2])
        right = tensor_over(ms[0], tensor_over(ms[1], ms[2]))
        if bimodule_iso_pointed(left, right) is None:
            _fail("tensor composition is not associative up to pointed iso")


# -- skein layer --------------------------------------------------------------


def check_tl_dimensions(full, rng):
    top = 10 if full else 6
    for nb in range(top + 1):
        for nt in range(top + 1 - nb):
            count = len(tl_basis(nb, nt))
            want = catalan((nb + nt) // 2) if (nb + nt) % 2 == 0 else 0
            if count != want:
                _fail(f"hom({nb},{nt}) has {count} diagrams, expected {want}")


def check_tl_relations(full, rng):
    d = delta()
    for n in range(2, _sizes(full)["tl_n"] + 1):
        for i in range(n - 1):
            e = tl_e(n, i)
            if tl_compose(e, e) != e.scaled(d):
                _fail(f"e_{i}^2 != delta e_{i} at n={n}")
            if i + 1 < n - 1:
                e2 = tl_e(n, i + 1)
                if tl_compose(tl_compose(e, e2), e) != e:
                    _fail(f"e e' e != e at n={n}, i={i}")
            for j in range(i + 2, n - 1):
                e2 = tl_e(n, j)
                if tl_compose(e, e2) != tl_compose(e2, e):
                    _fail(f"far commutation fails at n={n}, (i,j)=({i},{j})")
    b = crossing_resolution(1)
    id1 = tl_identity(1)
    b12, b23 = tl_tensor(b, id1), tl_tensor(id1, b)
    if tl_compose(tl_compose(b12, b23), b12) != tl_compose(tl_compose(b23, b12), b23):
        _fail("braid relation fails in TL(3,3)")


def check_interchange(full, rng):
    for _ in range(6 if full else 3):
        word1, n1 = random_braid(rng, 2, 3)
        word2, n2 = random_braid(rng, 2, 3)
        f = interpret_tangle(braid_to_slices(word1, n1))
        g = interpret_tangle(braid_to_slices(word2, n2))
        f2 = interpret_tangle(braid_to_slices(list(reversed(word1)), n1))
        g2 = interpret_tangle(braid_to_slices(list(reversed(word2)), n2))
        lhs = tl_compose(tl_tensor(f, g), tl_tensor(f2, g2))
        rhs = tl_tensor(tl_compose(f, f2), tl_compose(g, g2))
        if lhs != rhs:
            _fail("interchange law fails")


def check_kauffman_moves(full, rng):
    sizes = _sizes(full)
    minus_a_cubed = LaurentPoly.from_dict({3: -1})
    for k in range(sizes["braid_moves"]):
        word, n = random_braid(rng, sizes["max_crossings"], sizes["max_strands"])
        base = kauffman_bracket(closed_braid_tangle(word, n), verify=False)
        pos = rng.randint(0, len(word))
        g = rng.randint(1, n - 1)
        move = k % 3
        if move == 0:  # R2 insertion
            word2 = word[:pos] + [g, -g] + word[pos:]
            if kauffman_bracket(closed_braid_tangle(word2, n), verify=False) != base:
                _fail("bracket changed under an R2 insertion")
        elif move == 1 and n >= 3:  # R3: both braid-relation words agree
            g = rng.randint(1, n - 2)
            s = rng.choice([1, -1])
            w1 = word[:pos] + [s * g, s * (g + 1), s * g] + word[pos:]
            w2 = word[:pos] + [s * (g + 1), s * g, s * (g + 1)] + word[pos:]
            if (kauffman_bracket(closed_braid_tangle(w1, n), verify=False)
                    != kauffman_bracket(closed_braid_tangle(w2, n), verify=False)):
                _fail("bracket changed under an R3 move")
        else:  # R1: a curl scales by -A^(+-3)
            sign = rng.choice([1, -1])
            t = closed_braid_tangle(word, n)
            wire = rng.randrange(n)
            t2 = insert_slices(t, n + len(word), kink_slices(n + n, wire, sign))
            got = kauffman_bracket(t2, verify=False)
            want = (minus_a_cubed ** sign) * base
            if got != want:
                _fail("R1 curl did not scale the bracket by -A^(+-3)")


def check_evaluator_agreement(full, rng):
    for _ in range(10 if full else 4):
        word, n = random_braid(rng, 6 if full else 4, 3)
        t = closed_braid_tangle(word, n)
        # verify=True recomputes through the independent state sum
        kauffman_bracket(t, verify=True)


def check_locality(full, rng):
    for _ in range(8 if full else 3):
        word, n = random_braid(rng, 5, 3)
        t = braid_to_slices(word, n)
        i = rng.randint(0, len(t.slices) - 1)
        j = rng.randint(i + 1, len(t.slices))
        sub = tangle(n, t.slices[i:j])
        replaced = list(t.slices[:i]) + [
            (coupon(interpret_tangle(sub)),)] + list(t.slices[j:])
        if interpret_tangle(tangle(n, replaced)) != interpret_tangle(t):
            _fail("replacing a slice range by its interpretation changed the result")


def check_ribbon_axioms(full, rng):
    report = ribbon_axiom_checks()
    for c in report.checks:
        if not c.passed:
            _fail(f"ribbon identity {c.name} fails: {c.detail}")


def check_annulus(full, rng):
    top = 5 if full else 3
    for n in range(top + 1):
        got = annulus_closure_eval(tl_identity(n))
        if got.coeffs != ({n: LaurentPoly.constant(1)} if n else
                          {0: LaurentPoly.constant(1)}):
            _fail(f"annular closure of id_{n} is not z^{n}")
    for _ in range(10 if full else 4):
        w1, n1 = random_braid(rng, 4 if full else 3, 3)
        w2, n2 = random_braid(rng, 4 if full else 3, 3)
        m1 = interpret_tangle(braid_to_slices(w1, n1))
        m2 = interpret_tangle(braid_to_slices(w2, n2))
        nested = annulus_closure_eval(tl_tensor(m1, m2))
        if nested != annulus_closure_eval(m1) * annulus_closure_eval(m2):
            _fail("nested annular union is not multiplicative")


def check_plane_closure_consistency(full, rng):
    for _ in range(8 if full else 3):
        word, n = random_braid(rng, 5 if full else 4, 3)
        via_plane = plane_closure(interpret_tangle(braid_to_slices(word, n)))
        via_tangle = kauffman_bracket(closed_braid_tangle(word, n), verify=False)
        if via_plane != via_tangle:
            _fail("plane closure disagrees with the closed-tangle bracket")


ALL_CHECKS = [
    ("linalg.rank-nullity", check_rank_nullity),
    ("linalg.rref-idempotent", check_rref_idempotent),
    ("linalg.laurent-ring-axioms", check_laurent_ring_axioms),
    ("linalg.quotient-projection", check_quotient_projection),
    ("algebra.modulation-functoriality", check_modulation_functoriality),
    ("algebra.tensor-unit-laws", check_tensor_unit_laws),
    ("algebra.conjugation-agreement", check_conjugation_agreement),
    ("algebra.projectivity", check_projectivity),
    ("algebra.tensor-associativity", check_tensor_associativity),
    ("tqft1d.picture-equivalence", check_picture_equivalence),
    ("tqft1d.group-law", check_group_law),
    ("tqft1d.split-functoriality", check_split_functoriality),
    ("tqft1d.projective-rescaling", check_projective_rescaling),
    ("skein.tl-dimensions", check_tl_dimensions),
    ("skein.tl-relations", check_tl_relations),
    ("skein.interchange", check_interchange),
    ("skein.kauffman-moves", check_kauffman_moves),
    ("skein.evaluator-agreement", check_evaluator_agreement),
    ("skein.locality", check_locality),
    ("skein.ribbon-axioms", check_ribbon_axioms),
    ("skein.annulus", check_annulus),
    ("skein.plane-closure", check_plane_closure_consistency),
]


def run_selftest(level: str = "quick", seed: int = 0, out=print) -> int:
    """Run the invariant catalogue; return 0 on success, 5 on any failure."""
    full = level == "full"
    failures = 0
    for name, fn in ALL_CHECKS:
        rng = random.Random(f"{seed}:{name}")  # string seeding is stable
        try:
            fn(full, rng)
        except Exception as exc:  # any escape fails the named invariant
            out(f"FAIL {name}: {exc}")
            failures += 1
        else:
            out(f"ok   {name}")
    if failures:
        out(f"{failures} invariant(s) failed")
        return 5
    out(f"all {len(ALL_CHECKS)} invariants hold at level {level!r}")
    return 0
