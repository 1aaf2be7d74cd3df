"""One-dimensional quantum-mechanical spacetimes with point defects.

Words of generators (time-evolution intervals and labeled point defects)
are evaluated in two pictures and compared:

  * Schrodinger: each generator becomes a matrix and the word becomes a
    matrix product;
  * Heisenberg: each generator becomes a pointed bimodule over
    endomorphism algebras and the word becomes a tensor composite.

Durations are positive integers and u(t) is the t-th power of the step
matrix, which is exactly what the group law u(s) u(t) = u(s+t) needs.
Words are written left to right in diagram order and evaluated in
function-composition order: the rightmost generator applies first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .algebra import field_algebra
from .bimodule import (PointedBimodule, bimodule_iso_pointed, end_morphism,
                       ideal_quotient_module, modulate, regular_bimodule,
                       tensor_over)
from .algebra import Algebra, AlgebraHom, hom_power
from .errors import (ContractViolation, InternalCheckError, LabelNotFound,
                     ParseError)
from .linalg import Matrix

PT = "pt"
EMPTY = "empty"


@dataclass(frozen=True)
class System:
    """A space of states with a step matrix and labeled defect data."""

    dim_v: int
    step: Matrix
    states: dict = field(default_factory=dict)      # label -> column tuple
    costates: dict = field(default_factory=dict)    # label -> row tuple
    observables: dict = field(default_factory=dict)  # label -> Matrix


def make_system(dim_v: int, step: Matrix, states=None, costates=None,
                observables=None) -> System:
    if dim_v < 1:
        raise ContractViolation("the space of states must be positive-dimensional")
    if (step.rows, step.cols) != (dim_v, dim_v):
        raise ContractViolation("step matrix shape does not match dim")
    states = {k: tuple(v) for k, v in (states or {}).items()}
    costates = {k: tuple(v) for k, v in (costates or {}).items()}
    observables = dict(observables or {})
    for k, v in states.items():
        if len(v) != dim_v:
            raise ContractViolation(f"state {k!r} has wrong length")
    for k, v in costates.items():
        if len(v) != dim_v:
            raise ContractViolation(f"costate {k!r} has wrong length")
    for k, m in observables.items():
        if (m.rows, m.cols) != (dim_v, dim_v):
            raise ContractViolation(f"observable {k!r} has wrong shape")
    return System(dim_v, step, states, costates, observables)


# generators are ("u", t), ("v", label), ("w", label), ("a", label)

_ENDPOINTS = {"u": (PT, PT), "a": (PT, PT), "v": (EMPTY, PT), "w": (PT, EMPTY)}


def generator_endpoints(gen):
    return _ENDPOINTS[gen[0]]


@dataclass(frozen=True)
class SpacetimeWord:
    """A composable sequence of generators, leftmost applied last."""

    gens: tuple
    at: str = PT  # endpoint of the empty word; ignored otherwise

    @property
    def source(self) -> str:
        return generator_endpoints(self.gens[-1])[0] if self.gens else self.at

    @property
    def target(self) -> str:
        return generator_endpoints(self.gens[0])[1] if self.gens else self.at

    @property
    def is_closed(self) -> bool:
        return self.source == EMPTY and self.target == EMPTY

    def __len__(self):
        return len(self.gens)


def make_word(gens, at: str = PT) -> SpacetimeWord:
    gens = tuple(gens)
    for k, (g, h) in enumerate(zip(gens, gens[1:])):
        # in f o g the source of f must be the target of g
        if generator_endpoints(g)[0] != generator_endpoints(h)[1]:
            raise ContractViolation(
                f"generators at positions {k} and {k + 1} do not compose: "
                f"{g[0]} has source {generator_endpoints(g)[0]} but "
                f"{h[0]} has target {generator_endpoints(h)[1]}")
    if at not in (PT, EMPTY):
        raise ContractViolation("endpoint must be 'pt' or 'empty'")
    return SpacetimeWord(gens, at)


_GEN_RE = re.compile(r"u\(\s*(\d+)\s*\)|([vwa])\[\s*(\w+)\s*\]")


def parse_word(text: str) -> SpacetimeWord:
    """Parse ``gen ("." gen)*`` with gen one of u(INT), v[LBL], w[LBL], a[LBL]."""
    gens = []
    pos = 0
    n = len(text)
    expecting_gen = True
    while pos < n:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        if not expecting_gen:
            if text[pos] != ".":
                raise ParseError("expected '.' between generators", pos)
            pos += 1
            expecting_gen = True
            continue
        m = _GEN_RE.match(text, pos)
        if not m:
            raise ParseError("expected a generator u(INT), v[LBL], w[LBL] or a[LBL]",
                             pos)
        if m.group(1) is not None:
            t = int(m.group(1))
            if t < 1:
                raise ParseError("duration must be a positive integer", pos)
            gens.append(("u", t))
        else:
            gens.append((m.group(2), m.group(3)))
        pos = m.end()
        expecting_gen = False
    if expecting_gen:
        raise ParseError("empty word or trailing '.'", pos)
    return make_word(gens)


def _step_power(sys: System, t: int) -> Matrix:
    out = Matrix.identity(sys.dim_v)
    for _ in range(t):
        out = sys.step @ out
    return out


def _lookup(table: dict, kind: str, label: str):
    if label not in table:
        raise LabelNotFound(f"no {kind} with label {label!r}")
    return table[label]


def _schrodinger_matrix(sys: System, gen) -> Matrix:
    kind, arg = gen
    if kind == "u":
        return _step_power(sys, arg)
    if kind == "a":
        return _lookup(sys.observables, "observable", arg)
    if kind == "v":
        return Matrix.column(_lookup(sys.states, "state", arg))
    return Matrix.row_vector(_lookup(sys.costates, "costate", arg))


def eval_schrodinger(sys: System, word: SpacetimeWord) -> Matrix:
    """The matrix of the word; a closed word yields a 1x1 matrix."""
    if not word.gens:
        return Matrix.identity(sys.dim_v if word.at == PT else 1)
    out = None
    for gen in word.gens:
        m = _schrodinger_matrix(sys, gen)
        out = m if out is None else out @ m
    return out


def _heisenberg_bimodule(sys: System, gen) -> PointedBimodule:
    return end_morphism(_schrodinger_matrix(sys, gen))


def eval_heisenberg(sys: System, word: SpacetimeWord, *,
                    max_dim=None) -> PointedBimodule:
    """The pointed bimodule of the word under the endomorphism picture.

    Every generator passes through the hom-space construction (intervals
    and observables give the endomorphism algebra acting on itself,
    states give hom(K, V), costates hom(V, K)); the word is the tensor
    composite in diagram order.
    """
    cap = max_dim if max_dim is not None else max(sys.dim_v ** 2, 1)
    if not word.gens:
        n = sys.dim_v if word.at == PT else 1
        return end_morphism(Matrix.identity(n))
    out = None
    for gen in word.gens:
        b = _heisenberg_bimodule(sys, gen)
        out = b if out is None else tensor_over(out, b, max_dim=cap)
    return out


@dataclass(frozen=True)
class PictureReport:
    schrodinger_value: object
    heisenberg_value: object
    agree: bool


def compare_pictures(sys: System, word: SpacetimeWord) -> PictureReport:
    """Compare the closed-word scalar in both pictures (exact equality)."""
    if not word.is_closed:
        raise ContractViolation("picture comparison needs a closed word")
    s = eval_schrodinger(sys, word)[0, 0]
    h = eval_heisenberg(sys, word)
    if h.dim != 1 or h.left != field_algebra() or h.right != field_algebra():
        raise InternalCheckError("closed word did not evaluate to a scalar bimodule")
    return PictureReport(s, h.pointing[0], s == h.pointing[0])


def system_from_heisenberg_data(alg: Algebra, f: AlgebraHom, *,
                                left_ideals=None, right_ideals=None,
                                elements=None, t_max: int = 3,
                                trials: int = 32, seed: int = 0) -> dict:
    """Generator-to-bimodule table for an algebra-first system description.

    u-entries are t-fold tensor powers of the modulation of f (checked
    pointed-isomorphic to the modulation of f^t); element labels give the
    regular bimodule pointed by the element; ideals give the one-sided
    quotient modules pointed by the class of the unit.
    """
    if f.source != alg or f.target != alg:
        raise ContractViolation("time evolution must be an endomorphism of the algebra")
    table: dict = {}
    m1 = modulate(f)
    power = m1
    for t in range(1, t_max + 1):
        if t > 1:
            power = tensor_over(power, m1, max_dim=alg.dim)
        expected = modulate(hom_power(f, t))
        if bimodule_iso_pointed(power, expected, trials=trials, seed=seed) is None:
            raise InternalCheckError(
                f"tensor power {t} of the modulation is not isomorphic to the "
                "modulation of the power")
        table[("u", t)] = power
    for label, vec in (elements or {}).items():
        table[("a", label)] = regular_bimodule(alg, pointing=tuple(vec))
    for label, gens in (left_ideals or {}).items():
        table[("v", label)] = ideal_quotient_module(alg, gens, "left")
    for label, gens in (right_ideals or {}).items():
        table[("w", label)] = ideal_quotient_module(alg, gens, "right")
    return table
