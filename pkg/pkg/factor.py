"""
dpwheel - Constructive factorization

Writes every element of DPW_n as a word over the named generators.

Rim world (MinusFactorizer), for alpha in DPW_n^- on 1..n:
- alpha in DI_n: gap idempotents e_t = g^{n-t} e g^t, then the dihedral witness
- rank n-2, two arcs: rotate the smaller arc to 1..j+1; what remains is
  one of e_{j+2}e_n, c_j, c_j e_{j+2} e_n hg^{j+1}, e_{j+2} e_n hg^{j+1}
- rank k <= n-3: alpha = g^{n-r+1} delta^-1 e_{t+1} beta_bar gamma_2 lambda gamma_1 g^{s-1},
  every piece of rank > k, each factored recursively; the almost-identity
  pieces gamma_1, gamma_2 are split as gamma_bar times gap idempotents

Full world (factor_full), for alpha in DPW_n on 0..n:
- Minus: rim word, hub-fixing labels, then iota
- Plus: rim word of alpha Psi with hub-fixing labels
- Outside (rank <= 4): alpha = alpha_1 z alpha_2 with alpha_1, alpha_2 in the union
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from pkg.closure import MonoidClosure
from pkg.errors import AmbientMismatchError, FactorizationError, NotAMemberError
from pkg.gens import (
    C,
    E,
    E0,
    G,
    G0,
    H,
    IOTA,
    Z,
    E_i,
    GeneratorLabel,
    build,
    genset_full,
)
from pkg.graphs import rim, wheel
from pkg.isometry import dihedral_witness, is_partial_isometry, rotation
from pkg.ptrans import (
    PartialInjection,
    compose,
    compose_all,
    inverse,
    omega,
    omega0,
)
from pkg.wheel import (
    Arc,
    Classification,
    Orientation,
    char_member_minus,
    classify,
    maximal_arcs,
    orientation,
    project,
    psi,
)

logger = logging.getLogger(__name__)

Labels = Tuple[GeneratorLabel, ...]

# e0 = g0^3 z^2 g0 when n = 4, where e0 is not in the generating set
N4_E0 = (G0, G0, G0, Z, Z, G0)


@dataclass(frozen=True)
class Word:
    """A generator word; evaluation composes left to right"""

    n: int
    full_world: bool
    labels: Labels

    @property
    def ambient(self) -> Tuple[int, ...]:
        return omega0(self.n) if self.full_world else omega(self.n)

    def __len__(self) -> int:
        return len(self.labels)

    def to_list(self) -> List[str]:
        return [str(label) for label in self.labels]

    def __str__(self) -> str:
        return "[" + ", ".join(self.to_list()) + "]"


def evaluate(word: Word) -> PartialInjection:
    return compose_all(word.ambient, (build(word.n, label) for label in word.labels))


def _g_power(n: int, m: int) -> Labels:
    return (G,) * (m % n)


def _e_word(n: int, t: int) -> Labels:
    """e_t = g^{n-t} e g^t"""
    return _g_power(n, n - t) + (E,) + _g_power(n, t)


def _mapping_element(n: int, mapping: Dict[int, int], full_world: bool = False) -> PartialInjection:
    return PartialInjection.from_mapping(omega0(n) if full_world else omega(n), mapping)


def _hubbed(n: int, mapping: Dict[int, int]) -> PartialInjection:
    return _mapping_element(n, mapping, full_world=True)


class MinusFactorizer:
    """Words over g, h, e, c_j for elements of DPW_n^-"""

    def __init__(self, n: int, check: bool = True):
        self.n = n
        self.check = check
        self._memo: Dict[PartialInjection, Labels] = {}

    def factor(self, alpha: PartialInjection) -> Word:
        if alpha.ambient != omega(self.n):
            raise AmbientMismatchError(f"rim factorization needs an element on 1..{self.n}")
        if not char_member_minus(self.n, alpha):
            raise NotAMemberError(f"{alpha} is not in DPW_{self.n}^-")
        return Word(self.n, False, self.labels(alpha))

    def labels(self, alpha: PartialInjection) -> Labels:
        cached = self._memo.get(alpha)
        if cached is not None:
            return cached
        n = self.n
        if dihedral_witness(n, alpha) is not None:
            word = self.di_labels(alpha)
        elif alpha.rank == n - 2:
            word = self._corank_two_labels(alpha)
        elif alpha.rank <= n - 3:
            pieces = self._low_rank_pieces(alpha)
            word = tuple(label for piece in pieces for label in self.labels(piece))
        else:
            raise FactorizationError(f"{alpha} has rank >= n-1 but is not in DI_{n}")
        self._memo[alpha] = word
        return word

    def di_labels(self, alpha: PartialInjection) -> Labels:
        n = self.n
        witness = dihedral_witness(n, alpha)
        if witness is None:
            raise NotAMemberError(f"{alpha} is not in DI_{n}")
        word: Labels = ()
        for t in sorted(set(omega(n)) - alpha.domain):
            word += _e_word(n, t)
        if witness.reflection:
            word += (H,)
        return word + _g_power(n, witness.k)

    def _di_pieces(self, alpha: PartialInjection) -> List[PartialInjection]:
        n = self.n
        witness = dihedral_witness(n, alpha)
        if witness is None:
            raise NotAMemberError(f"{alpha} is not in DI_{n}")
        gaps = sorted(set(omega(n)) - alpha.domain)
        return [build(n, E_i(t)) for t in gaps] + [witness.element]

    def _image_arc(self, alpha: PartialInjection, arc: Arc) -> Arc:
        m = alpha.mapping
        target = frozenset(m[x] for x in arc.members)
        for candidate in maximal_arcs(self.n, alpha.image):
            if candidate.points == target:
                return candidate
        raise NotAMemberError(f"{alpha} does not map {arc} onto a maximal arc")

    def _corank_two_labels(self, alpha: PartialInjection) -> Labels:
        n = self.n
        arcs = maximal_arcs(n, alpha.domain)
        if len(arcs) != 2:
            raise FactorizationError(f"rank n-2 element {alpha} outside DI_{n} must have two arcs")
        first = min(arcs, key=lambda a: (a.size, a.min))
        j = first.size - 1
        r = first.i
        s = self._image_arc(alpha, first).i
        beta = compose_all(omega(n), (rotation(n, r - 1), alpha, rotation(n, n - s + 1)))

        if dihedral_witness(n, beta) is not None:
            middle = self.di_labels(beta)
        else:
            head = orientation(n, beta, Arc(n, 1, j + 1))
            tail = orientation(n, beta, Arc(n, j + 3, n - 1))
            if head is Orientation.PRESERVES and tail is Orientation.REVERSES:
                middle = (C(j),)
            elif head is Orientation.REVERSES and tail is Orientation.PRESERVES:
                middle = (C(j),) + _e_word(n, j + 2) + _e_word(n, n) + (H,) + _g_power(n, j + 1)
            else:
                raise FactorizationError(f"unexpected arc orientations for {beta}")
        return _g_power(n, n - r + 1) + middle + _g_power(n, s - 1)

    def _low_rank_pieces(self, alpha: PartialInjection) -> List[PartialInjection]:
        """Elements of rank > rank(alpha) whose product is alpha"""
        n = self.n
        k = alpha.rank
        first = maximal_arcs(n, alpha.domain)[0]
        t = first.size
        r = first.i
        s = self._image_arc(alpha, first).i

        beta0 = compose_all(omega(n), (rotation(n, r - 1), alpha, rotation(n, n - s + 1)))
        b0 = beta0.mapping
        gamma1_map = {y: y for y in beta0.image if y > t}
        gamma1_map.update({x: b0[x] for x in range(1, t + 1)})
        gamma1 = _mapping_element(n, gamma1_map)
        # beta0 = beta gamma1 with beta fixing 1..t
        beta = compose(beta0, inverse(gamma1))

        second = maximal_arcs(n, beta.domain)[1]
        p = second.size
        jj = second.min - t
        bm = beta.mapping
        a = t + 2
        b = max(bm[x] for x in second.members)

        lam_map = {x: x for x in range(b + 2, n + 1)}
        lam_map.update({x: x for x in range(1, t + 1)})
        lam_map.update({x: a + b - x for x in range(a, b + 1)})
        lam = _mapping_element(n, lam_map)

        beta_lam = compose(beta, lam)
        back = {y: x for x, y in beta_lam.pairs}
        block = range(t + 2, t + p + 2)
        # straighten the block so that delta beta lambda fixes 1..t and t+2..t+p+1
        straighten_map = {y: y for y in beta_lam.image if y not in block}
        straighten_map.update({y: back[y] - (jj - 2) for y in block})
        straighten = _mapping_element(n, straighten_map)
        gamma2 = inverse(straighten)

        delta_map = {x: x for x in range(1, t + 1)}
        delta_map.update({x: x + jj - 2 for x in range(t + 2, n - jj + 2)})
        delta = _mapping_element(n, delta_map)

        core = compose_all(omega(n), (delta, beta_lam, straighten))
        bar_map = dict(core.mapping)
        bar_map[t + 1] = t + 1
        beta_bar = _mapping_element(n, bar_map)

        pieces: List[PartialInjection] = []
        if (n - r + 1) % n:
            pieces.append(rotation(n, n - r + 1))
        pieces.extend(self._delta_inverse_pieces(t, jj, delta))
        pieces.append(build(n, E_i(t + 1)))
        pieces.append(beta_bar)
        pieces.extend(self._almost_identity_pieces(gamma2))
        pieces.append(lam)
        pieces.extend(self._almost_identity_pieces(gamma1))
        if (s - 1) % n:
            pieces.append(rotation(n, s - 1))

        if self.check:
            self._check_pieces(alpha, pieces, k)
        return pieces

    def _delta_inverse_pieces(self, t: int, jj: int, delta: PartialInjection) -> List[PartialInjection]:
        n = self.n
        if jj == 2:
            return [inverse(delta)]
        if jj == 3:
            # fix 1..t and reverse t+2..n-1, then fix 1..t+1 and reverse t+3..n-1
            first = {x: x for x in range(1, t + 1)}
            first.update({x: (t + 2) + (n - 1) - x for x in range(t + 2, n)})
            second = {x: x for x in range(1, t + 2)}
            second.update({x: (t + 3) + (n - 1) - x for x in range(t + 3, n)})
            return [_mapping_element(n, second), _mapping_element(n, first)]
        shift = {x: x for x in range(1, t + 1)}
        shift.update({x: x + jj - 3 for x in range(t + 2, n - jj + 3)})
        step = {x: x for x in range(1, t + 2)}
        step.update({x: x + 1 for x in range(t + jj - 1, n - 1)})
        return [inverse(_mapping_element(n, step)), inverse(_mapping_element(n, shift))]

    def _almost_identity_pieces(self, gamma: PartialInjection) -> List[PartialInjection]:
        """gamma fixes every maximal arc but one; split it into higher-rank pieces"""
        n = self.n
        if dihedral_witness(n, gamma) is not None:
            return self._di_pieces(gamma)
        m = gamma.mapping
        arcs = maximal_arcs(n, gamma.domain)
        moved = [i for i, arc in enumerate(arcs) if any(m[x] != x for x in arc.members)]
        if len(moved) != 1:
            raise FactorizationError(f"{gamma} moves {len(moved)} arcs, expected one")
        twisted = moved[0]
        size = len(arcs)
        if size == 2:
            other = arcs[1 - twisted]
            r, s = other.i, other.j
            fill = [rim(n, r - 1)] if rim(n, r - 2) not in gamma.domain else [rim(n, s + 1)]
        else:
            i = next(i for i in range(size) if twisted not in (i, (i + 1) % size))
            left, right = arcs[i], arcs[(i + 1) % size]
            fill = []
            x = rim(n, left.j + 1)
            while x != right.i:
                fill.append(x)
                x = rim(n, x + 1)
        bar = dict(m)
        bar.update({x: x for x in fill})
        return [_mapping_element(n, bar)] + [build(n, E_i(x)) for x in sorted(fill)]

    def _check_pieces(self, alpha: PartialInjection, pieces: Sequence[PartialInjection], k: int) -> None:
        for piece in pieces:
            if piece.rank <= k:
                raise FactorizationError(f"piece {piece} of {alpha} does not have rank > {k}")
            if not char_member_minus(self.n, piece):
                raise FactorizationError(f"piece {piece} of {alpha} is not in DPW_{self.n}^-")
        if compose_all(omega(self.n), pieces) != alpha:
            raise FactorizationError(f"pieces do not multiply back to {alpha}")


def factor_DI(n: int, alpha: PartialInjection) -> Word:
    if alpha.ambient != omega(n):
        raise AmbientMismatchError(f"DI_{n} factorization needs an element on 1..{n}")
    return Word(n, False, MinusFactorizer(n).di_labels(alpha))


def factor_minus(n: int, alpha: PartialInjection, check: bool = True) -> Word:
    return MinusFactorizer(n, check=check).factor(alpha)


class FullFactorizer:
    """Words over genset_full(n) for elements of DPW_n"""

    def __init__(self, n: int, check: bool = True):
        self.n = n
        self.check = check
        self.rim = MinusFactorizer(n, check=check)
        self.graph = wheel(n)
        self.generators = {x: label for label, x in genset_full(n)}

    def factor(self, alpha: PartialInjection) -> Word:
        n = self.n
        if alpha.ambient != omega0(n):
            raise AmbientMismatchError(f"factorization in DPW_{n} needs an element on 0..{n}")
        if not is_partial_isometry(self.graph, alpha):
            raise NotAMemberError(f"{alpha} is not a partial isometry of W_{n}")
        return Word(n, True, self.labels(alpha))

    def labels(self, alpha: PartialInjection) -> Labels:
        if alpha in self.generators:
            return (self.generators[alpha],)
        kind = classify(self.n, alpha)
        if kind is Classification.MINUS:
            return self._minus_labels(project(alpha))
        if kind is Classification.PLUS:
            return self._plus_labels(psi(alpha))
        left, right = self._outside_pieces(alpha)
        word = self.labels(left) if left is not None else ()
        word += (Z,)
        if right is not None:
            word += self.labels(right)
        return word

    def _plus_labels(self, beta: PartialInjection) -> Labels:
        """Word for psi_inv(beta), beta on the rim"""
        word: Labels = ()
        for label in self.rim.labels(beta):
            full = label.to_full_world()
            word += N4_E0 if self.n == 4 and full == E0 else (full,)
        return word

    def _minus_labels(self, beta: PartialInjection) -> Labels:
        """Word for beta as a hubless map on 0..n: hub-fixing word, then iota"""
        return self._plus_labels(beta) + (IOTA,)

    def _outside_pieces(
        self, alpha: PartialInjection
    ) -> Tuple[Optional[PartialInjection], Optional[PartialInjection]]:
        """(left, right) with alpha = left z right; None stands for the empty word"""
        n = self.n
        in_dom = 0 in alpha.domain
        in_im = 0 in alpha.image
        if in_im and not in_dom:
            left, right = self._outside_pieces(inverse(alpha))
            return (
                inverse(right) if right is not None else None,
                inverse(left) if left is not None else None,
            )

        k = alpha.rank
        m = alpha.mapping
        back = {y: x for x, y in alpha.pairs}
        others = sorted(alpha.domain - {0})

        if k > 4:
            raise FactorizationError(f"outside element {alpha} has rank {k} > 4")
        if k == 4:
            if not in_im:
                raise FactorizationError(f"rank 4 outside element {alpha} must have the hub in its image")
            i = back[0]
            if set(others) != {rim(n, i - 1), i, rim(n, i + 1)}:
                raise FactorizationError(f"rank 4 outside element {alpha} has an unexpected domain")
            left = _hubbed(n, {0: 0, rim(n, i - 1): n, i: 1, rim(n, i + 1): 2})
            right = _hubbed(n, {0: 0, 1: m[0], 2: m[rim(n, i + 1)], n: m[rim(n, i - 1)]})
        elif k == 3 and in_im:
            i = back[0]
            (a,) = [x for x in others if x != i]
            left = _hubbed(n, {0: 0, i: 1, a: 2})
            right = _hubbed(n, {0: 0, 1: m[0], 2: m[a]})
        elif k == 3:
            a, b = others
            left = _hubbed(n, {0: 0, a: 2, b: n})
            right = _hubbed(n, {1: m[0], 2: m[a], n: m[b]})
        elif k == 2 and in_im:
            i = back[0]
            left = _hubbed(n, {0: 0, i: 1})
            right = _hubbed(n, {0: 0, 1: m[0]})
        elif k == 2:
            (i,) = others
            left = _hubbed(n, {0: 0, i: 2})
            right = _hubbed(n, {1: m[0], 2: m[i]})
        elif k == 1:
            return None, _hubbed(n, {1: m[0]})
        else:
            raise FactorizationError(f"{alpha} matches no outside case")

        if self.check:
            for piece in (left, right):
                if not is_partial_isometry(self.graph, piece) or classify(n, piece) is Classification.OUTSIDE:
                    raise FactorizationError(f"piece {piece} of {alpha} is not in the union")
            if compose_all(omega0(n), (left, build(n, Z), right)) != alpha:
                raise FactorizationError(f"pieces do not multiply back to {alpha}")
        return left, right


def factor_full(n: int, alpha: PartialInjection, check: bool = True) -> Word:
    return FullFactorizer(n, check=check).factor(alpha)


def shortest_word(closure: MonoidClosure, alpha: PartialInjection, n: int) -> Word:
    """BFS word from a closure built over a labelled generating set"""
    if alpha not in closure:
        raise NotAMemberError(f"{alpha} is not in the closure")
    labels = tuple(GeneratorLabel.parse(text) for text in closure.word(alpha))
    return Word(n, closure.ambient == omega0(n), labels)
