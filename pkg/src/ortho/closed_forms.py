# src/ortho/closed_forms.py
# Closed forms for G^O of transpositions and of the 321-avoiding family g_2n,
# plus the predicted B_inv / B_inv^+ sets of the special families.
#
# Everything is phrased through inverse one-line words: a word u stands for the
# permutation w with w^{-1} = u, so w(k) is the position of the letter k in u.

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from errors import UsageError
from grothendieck import GrothExpansion
from involutions import FamilyParameterError, Involution, binv, g_pair_family, t_family, w_family
from logger import get_logger
from permgroup import Permutation
from polyring import MultiPoly
from ortho.binv_plus import binv_plus_data
from ortho.coefficients import gco

logger = get_logger(__name__)

Word = Tuple[int, ...]

FAMILIES = ("t_n", "t_n_shifted", "g_2n")


def shuffles(left: Sequence[int], right: Sequence[int]) -> Iterator[Word]:
    if not left:
        yield tuple(right)
        return
    if not right:
        yield tuple(left)
        return
    for rest in shuffles(left[1:], right):
        yield (left[0],) + rest
    for rest in shuffles(left, right[1:]):
        yield (right[0],) + rest


def from_inverse_word(word: Iterable[int]) -> Permutation:
    return Permutation(word).inverse()


def letters_between(word: Word, first: int, second: int) -> int:
    return word.index(second) - word.index(first) - 1


# ---- transpositions (1, n) and (2, n) ---------------------------------


def sh_words_first(n: int) -> List[Word]:
    """
    Shuffles of n 1 with 2 3 ... (n-1) (n+1).
    """
    return list(shuffles((n, 1), tuple(range(2, n)) + (n + 1,)))


def x_words_first(n: int) -> List[Word]:
    return [u for u in sh_words_first(n) if u[-1] == n + 1 and letters_between(u, n, 1) <= 1]


def y_words_first(n: int) -> List[Word]:
    return [u for u in sh_words_first(n) if letters_between(u, n, 1) in (1, 2)]


def sh_words(n: int) -> List[Word]:
    """
    Shuffles of n 2 with 1 3 4 ... (n-1) (n+1).
    """
    return list(shuffles((n, 2), (1,) + tuple(range(3, n)) + (n + 1,)))


def x_words(n: int) -> List[Word]:
    return [
        u for u in sh_words(n)
        if u[0] == 1 and u[-1] == n + 1 and letters_between(u, n, 2) <= 1
    ]


def y_words(n: int) -> List[Word]:
    return [u for u in sh_words(n) if letters_between(u, n, 2) in (1, 2)]


def z_words(n: int) -> List[Word]:
    if n <= 3:
        return []
    if n == 4:
        return [(4, 1, 3, 5, 2)]
    return [(n, 1, 3, 4, 2) + tuple(range(5, n))]


def _transposition_form(x: List[Word], y: List[Word], low: int, n: int) -> GrothExpansion:
    terms: Dict[Permutation, MultiPoly] = {}
    for weight, words in ((2, x), (1, y)):
        for u in words:
            w = from_inverse_word(u)
            term = MultiPoly.beta(letters_between(u, n, low), weight)
            terms[w] = terms.get(w, MultiPoly()) + term
    return GrothExpansion(terms)


def t_closed_form(n: int) -> GrothExpansion:
    """
    G^O_{(1,n)}: 2 beta^{w(1)-w(n)-1} G_w over X_1(n) plus beta^{w(1)-w(n)-1} G_w over Y_1(n).
    """
    if n < 2:
        raise FamilyParameterError(f"(1,n) needs n >= 2, got {n}")
    return _transposition_form(x_words_first(n), y_words_first(n), 1, n)


def t_shifted_closed_form(n: int) -> GrothExpansion:
    """
    G^O_{(2,n)}: 2 beta^{w(2)-w(n)-1} G_w over X(n) plus beta^{w(2)-w(n)-1} G_w over Y(n).
    """
    if n < 3:
        raise FamilyParameterError(f"(2,n) needs n > 2, got {n}")
    return _transposition_form(x_words(n), y_words(n), 2, n)


# ---- g_2n = (2,n+1)(3,n+2)...(n,2n-1) ---------------------------------


def interleaved_words(n: int, offset: int, prefix: Word = ()) -> List[Word]:
    """
    prefix a_1 b_1 ... a_n b_n with {a_i, b_i} = {i, offset+i}, in lexicographic order.
    """
    words: List[Word] = [prefix]
    for i in range(1, n + 1):
        low, high = i, offset + i
        words = [u + pair for u in words for pair in ((low, high), (high, low))]
    return sorted(words)


def odd_left_descents(w: Permutation) -> FrozenSet[int]:
    return frozenset(i for i in w.des_l() if i % 2 == 1)


def g2n_u_max(n: int) -> Permutation:
    word = []
    for i in range(1, n + 1):
        word.extend((n + i, i))
    return from_inverse_word(word)


def g2n_closed_form(n: int) -> GrothExpansion:
    """
    G^O_{g_2n} = sum over B_inv^+ of 2^{n-1-|ODes_L(w)|} beta^{|ODes_L(w)|} G_w
    + (1/2)(-beta)^n G_{u_max}. The last term cancels u_max for odd n and halves it for even n.
    """
    if n < 3:
        raise FamilyParameterError(f"g_2n needs n > 2, got {n}")
    u_max = g2n_u_max(n)
    terms: Dict[Permutation, MultiPoly] = {}
    for u in interleaved_words(n, n):
        w = from_inverse_word(u)
        odes = len(odd_left_descents(w))
        if w == u_max:
            # 2^{-1} beta^n + (1/2)(-beta)^n
            if n % 2 == 0:
                terms[w] = MultiPoly.beta(odes, 1)
            continue
        terms[w] = MultiPoly.beta(odes, 2 ** (n - 1 - odes))
    return GrothExpansion(terms)


def closed_forms(family: str, n: int) -> GrothExpansion:
    builders = {
        "t_n": t_closed_form,
        "t_n_shifted": t_shifted_closed_form,
        "g_2n": g2n_closed_form,
    }
    if family not in builders:
        raise UsageError(f"unknown closed form '{family}', expected one of {FAMILIES}")
    return builders[family](n)


def closed_form_involution(family: str, n: int) -> Involution:
    if family == "t_n":
        return t_family(n)
    if family == "t_n_shifted":
        return Involution([(2, n)])
    if family == "g_2n":
        return g_pair_family(2, n)
    raise UsageError(f"unknown closed form '{family}', expected one of {FAMILIES}")


def closed_form_holds(family: str, n: int) -> bool:
    return closed_forms(family, n) == gco(closed_form_involution(family, n))


# ---- predicted sets ---------------------------------------------------


def _inverses(words: Iterable[Word]) -> FrozenSet[Permutation]:
    return frozenset(from_inverse_word(u) for u in words)


def predicted_binv(family: str, n: int) -> FrozenSet[Permutation]:
    if family == "t_n":
        return _inverses(x_words_first(n))
    if family == "t_n_shifted":
        return _inverses(x_words(n))
    if family == "g_2n":
        word = []
        for i in range(1, n + 1):
            word.extend((i, n + i))
        return frozenset({from_inverse_word(word)})
    raise UsageError(f"no predicted B_inv for '{family}'")


def predicted_binv_plus(family: str, n: int) -> FrozenSet[Permutation]:
    """
    Predicted B_inv^+ for t_n, t_n_shifted, g_2n and g_n. For w_0 the prediction is
    only a subset; see predicted_binv_plus_longest.
    """
    if family == "t_n":
        return _inverses(x_words_first(n) + y_words_first(n))
    if family == "t_n_shifted":
        return _inverses(x_words(n) + y_words(n) + z_words(n))
    if family == "g_2n":
        return _inverses(interleaved_words(n, n))
    if family == "g_n":
        return _inverses(interleaved_words(n, n + 1, prefix=(n + 1,)))
    raise UsageError(f"no predicted B_inv^+ for '{family}'")


def predicted_binv_plus_longest(n: int) -> FrozenSet[Permutation]:
    """
    Inverses of u_1 ... u_i (n+1) u_{i+1} ... u_n, where u is the inverse word of an
    element of B_inv(w_0) and n >= 2 u_j for every j > i.
    """
    w0 = Involution.from_permutation(Permutation(range(n, 0, -1)))
    predicted = set()
    for v in binv(w0):
        u = v.inverse().one_line(n)
        for i in range(1, n + 1):
            if all(n >= 2 * u[j] for j in range(i, n)):
                predicted.add(from_inverse_word(u[:i] + (n + 1,) + u[i:]))
    return frozenset(predicted)


# ---- w_ij ---------------------------------------------------------------


@dataclass(frozen=True)
class WijReport:
    i: int
    j: int
    applies: bool
    support_size: int
    binv_plus_size: int
    equal: bool

    @property
    def counterexample(self) -> bool:
        return self.applies and not self.equal

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "applies": self.applies,
            "support": self.support_size,
            "binv_plus": self.binv_plus_size,
            "equal": self.equal,
        }


def wij_report(i: int, j: int) -> WijReport:
    """
    Compare supp(GC^O_{w_ij}) with B_inv^+(w_ij). Equality is expected when i = 1
    or j - i is odd; the report records what was found either way.
    """
    z = w_family(i, j)
    support = gco(z).support()
    members = binv_plus_data(z).members
    report = WijReport(
        i=i,
        j=j,
        applies=i == 1 or (j - i) % 2 == 1,
        support_size=len(support),
        binv_plus_size=len(members),
        equal=support == members,
    )
    if report.counterexample:
        logger.warning(f"support of w_{i}{j} differs from B_inv^+: {len(support)} vs {len(members)}")
    return report
