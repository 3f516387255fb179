"""Full groups of Z-subshifts via orbit cocycles.

An element of the full group of a subshift (X, u) is given by a continuous
integer cocycle k with g(x) = u^{k(x)}(x); we represent k by finitely many
cylinder pieces (window word, start coordinate, value).  Validation checks
that the pieces partition the subshift and that the induced map is a
bijection.  Composition obeys k_{g o h}(x) = k_g(h(x)) + k_h(x).

A sliding block code between subshifts commutes with the shift by
construction; pulling cocycles back through one and iterating a chosen
full-group element v along it yields the induced homomorphism
rho(g)(x) = v^{k_g(q(x))}(x) on the support of v, identity elsewhere.
"""

import itertools

from .errors import (
    NotBijective,
    NotPartition,
    RuleIncomplete,
    UnknownLetter,
    UnsupportedIteration,
    WindowUndetermined,
)


class Subshift:
    """A two-sided subshift given by forbidden words (finite type) or by a
    substitution (the factor language of the iterated system)."""

    __slots__ = ("alphabet", "forbidden", "substitution", "_core", "_core_len", "_factors")

    def __init__(self, alphabet, forbidden=None, substitution=None):
        self.alphabet = tuple(sorted(set(alphabet)))
        if any(len(a) != 1 for a in self.alphabet):
            raise ValueError("letters must be single characters")
        if (forbidden is None) == (substitution is None):
            raise ValueError("exactly one backend: forbidden words or substitution")
        self.forbidden = tuple(sorted(set(forbidden))) if forbidden is not None else None
        self.substitution = dict(substitution) if substitution is not None else None
        if self.substitution is not None:
            for a in self.alphabet:
                if a not in self.substitution or not self.substitution[a]:
                    raise ValueError("substitution must map every letter to a nonempty word")
        self._factors = {}
        if self.forbidden is not None:
            self._build_core()
        else:
            self._core = None
            self._core_len = None

    def _build_core(self):
        """Nodes = admissible words of length r that lie on bi-infinite
        forbidden-free sequences (r = max forbidden length - 1, at least 1)."""
        L = max((len(f) for f in self.forbidden), default=1)
        r = max(L - 1, 1)
        words = [
            "".join(t)
            for t in itertools.product(self.alphabet, repeat=r)
            if not self._has_forbidden("".join(t))
        ]
        arcs = {
            w: [
                v
                for v in words
                if w[1:] == v[:-1] and not self._has_forbidden(w + v[-1])
            ]
            for w in words
        }
        alive = set(words)
        changed = True
        while changed:  # trim words with no forward or no backward continuation
            changed = False
            for w in list(alive):
                if not any(v in alive for v in arcs[w]):
                    alive.discard(w)
                    changed = True
            incoming = {w: 0 for w in alive}
            for w in alive:
                for v in arcs[w]:
                    if v in alive:
                        incoming[v] += 1
            for w in list(alive):
                if incoming.get(w, 0) == 0:
                    alive.discard(w)
                    changed = True
        self._core = alive
        self._core_len = r

    def _has_forbidden(self, w):
        return any(f in w for f in self.forbidden)

    def _check_letters(self, w):
        for ch in w:
            if ch not in self.alphabet:
                raise UnknownLetter("letter %r not in the alphabet" % ch)

    def check_depth(self):
        """Window length that certifies admissibility of periodic content
        (exact for the finite-type backend, a finite probe otherwise)."""
        if self.forbidden is not None:
            return self._core_len + 1
        return 8

    def language(self, w):
        """True iff the word occurs in the subshift."""
        self._check_letters(w)
        if self.forbidden is not None:
            if self._has_forbidden(w):
                return False
            r = self._core_len
            if len(w) >= r:
                return all(w[i : i + r] in self._core for i in range(len(w) - r + 1))
            return any(w in node for node in self._core)
        return w in self._substitution_factors(len(w))

    def _substitution_factors(self, n):
        """All length-n factors of the substitution system: close the set of
        factors of length <= n under taking factors of images."""
        if n == 0:
            return {""}
        if n in self._factors:
            return self._factors[n]
        words = set(self.alphabet)
        while True:
            new = set(words)
            for w in words:
                im = self._substitute(w)
                for i in range(len(im)):
                    new.add(im[i : i + n])
            if new == words:
                break
            words = new
        result = {w for w in words if len(w) == n}
        self._factors[n] = result
        return result

    def _substitute(self, w):
        return "".join(self.substitution[ch] for ch in w)

    def words(self, n, fixed=None, start=0):
        """All admissible words of length n; `fixed` pins absolute positions
        (relative to `start`) to letters."""
        fixed = fixed or {}
        out = []

        def rec(prefix):
            i = len(prefix)
            if i == n:
                out.append(prefix)
                return
            pos = start + i
            choices = (fixed[pos],) if pos in fixed else self.alphabet
            for ch in choices:
                cand = prefix + ch
                if self.language(cand):
                    rec(cand)

        rec("")
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Subshift)
            and self.alphabet == other.alphabet
            and self.forbidden == other.forbidden
            and self.substitution == other.substitution
        )

    def __hash__(self):
        sub = tuple(sorted(self.substitution.items())) if self.substitution else None
        return hash((self.alphabet, self.forbidden, sub))

    def __repr__(self):
        if self.forbidden is not None:
            return "Subshift(forbidden=%r)" % (self.forbidden,)
        return "Subshift(substitution=%r)" % (self.substitution,)


def full_shift(d=2):
    return Subshift([str(i) for i in range(d)], forbidden=[])


def golden_mean_shift():
    return Subshift(["0", "1"], forbidden=["11"])


def fibonacci_substitution():
    return Subshift(["a", "b"], substitution={"a": "ab", "b": "a"})


class BiPoint:
    """A two-sided eventually periodic point: left cycle, center word at
    positions [start, start+len), right cycle.  Normalized so the cycles are
    primitive, the center is minimal, and a globally periodic point has
    start 0 and empty center."""

    __slots__ = ("shift", "left", "center", "right", "start")

    def __init__(self, shift, left, center, right, start=0, _check=True):
        if not left or not right:
            raise ValueError("cycles must be nonempty")
        left, center, right, start = _normalize_bipoint(left, center, right, start)
        self.shift = shift
        self.left = left
        self.center = center
        self.right = right
        self.start = start
        if _check:
            shift._check_letters(left + center + right)
            # every factor up to the check depth must be admissible; the
            # window is centred on the aperiodic part and long enough to
            # wrap both cycles
            depth = shift.check_depth() + max(len(left), len(right))
            lo = start - depth
            hi = start + len(center) + depth
            if not shift.language(self.window_word(lo, hi)):
                raise ValueError("point is not admissible in the subshift")

    def symbol(self, i):
        if i < self.start:
            return self.left[(i - self.start) % len(self.left)]
        if i < self.start + len(self.center):
            return self.center[i - self.start]
        return self.right[(i - self.start - len(self.center)) % len(self.right)]

    def window_word(self, a, b):
        """Symbols at positions a..b-1."""
        return "".join(self.symbol(i) for i in range(a, b))

    def translate(self, k):
        """u^k of the point (index shift by k)."""
        return BiPoint(
            self.shift, self.left, self.center, self.right, self.start - k, _check=False
        )

    def __eq__(self, other):
        return (
            isinstance(other, BiPoint)
            and self.shift == other.shift
            and self.left == other.left
            and self.center == other.center
            and self.right == other.right
            and self.start == other.start
        )

    def __hash__(self):
        return hash((self.left, self.center, self.right, self.start))

    def __repr__(self):
        return "BiPoint(%s<|%s|>%s @%d)" % (self.left, self.center, self.right, self.start)


def _primitive(w):
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w == w[:p] * (n // p):
            return w[:p]
    return w


def _normalize_bipoint(left, center, right, start):
    left, right = _primitive(left), _primitive(right)
    changed = True
    while changed:
        changed = False
        if center and center[-1] == right[-1]:
            center = center[:-1]
            right = right[-1] + right[:-1]
            changed = True
        elif center and center[0] == left[0]:
            center = center[1:]
            left = left[1:] + left[0]
            start += 1
            changed = True
    if not center:
        # fully periodic?
        period = len(left) * len(right)
        fwd_left = "".join(left[t % len(left)] for t in range(period))
        fwd_right = "".join(right[t % len(right)] for t in range(period))
        if fwd_left == fwd_right:
            q = len(right)
            rot = "".join(right[(j - start) % q] for j in range(q))
            return _primitive(rot), "", _primitive(rot), 0
        guard = len(left) * len(right)
        while left[-1] == right[-1] and guard > 0:
            left = left[-1] + left[:-1]
            right = right[-1] + right[:-1]
            start -= 1
            guard -= 1
    return left, center, right, start


class CocycleElement:
    """A full-group element of a subshift, as a finite list of cocycle
    pieces (window, start, value); construct with cocycle_validate."""

    __slots__ = ("shift", "pieces")

    def __init__(self, shift, pieces, _canonical=False):
        pieces = tuple(sorted((str(w), int(s), int(k)) for w, s, k in pieces))
        for w, s, k in pieces:
            shift._check_letters(w)
        self.shift = shift
        self.pieces = pieces if _canonical else _canonical_pieces(shift, pieces)

    @classmethod
    def shift_power(cls, shift, k):
        return cls(shift, [("", 0, k)])

    def span(self):
        a = min((s for w, s, k in self.pieces), default=0)
        b = max((s + len(w) for w, s, k in self.pieces), default=0)
        return a, b

    def value_range(self):
        return {k for w, s, k in self.pieces}

    def as_map(self, a, b):
        """Total refinement: admissible word on [a, b) -> value."""
        out = {}
        for word in self.shift.words(b - a, start=a):
            out[word] = self._value_on(word, a)
        return out

    def _value_on(self, word, a):
        matches = [
            k
            for w, s, k in self.pieces
            if a <= s and s + len(w) <= a + len(word) and word[s - a : s - a + len(w)] == w
        ]
        if not matches:
            raise WindowUndetermined("no piece matches")
        return matches[0]

    def value_at(self, x):
        """The cocycle evaluated at a point."""
        for w, s, k in self.pieces:
            if x.window_word(s, s + len(w)) == w:
                return k
        raise WindowUndetermined("no piece matches the point")

    def apply(self, x):
        """g(x) = u^{k(x)}(x)."""
        return x.translate(self.value_at(x))

    def equal_element(self, other):
        """Same cocycle: identical values on the common refinement."""
        if self.shift != other.shift:
            raise ValueError("elements over different subshifts")
        a = min(self.span()[0], other.span()[0])
        b = max(self.span()[1], other.span()[1])
        return self.as_map(a, b) == other.as_map(a, b)

    def __repr__(self):
        return "CocycleElement%r" % (self.pieces,)


def _canonical_pieces(shift, pieces):
    """Refine to a full window map, then contract positions from both ends
    while the value function does not depend on them."""
    if not pieces:
        raise NotPartition("no pieces")
    a = min(s for w, s, k in pieces)
    b = max(s + len(w) for w, s, k in pieces)
    if a > 0:
        a = 0
    if b < 0:
        b = 0
    table = {}
    for word in shift.words(b - a, start=a):
        matches = [
            k
            for w, s, k in pieces
            if word[s - a : s - a + len(w)] == w
        ]
        if len(matches) != 1:
            raise NotPartition(
                "window %r at %d matched by %d pieces" % (word, a, len(matches))
            )
        table[word] = matches[0]
    changed = True
    while changed and b - a > 0:
        changed = False
        # right contraction
        grouped = {}
        for word, k in table.items():
            grouped.setdefault(word[:-1], set()).add(k)
        if all(len(v) == 1 for v in grouped.values()):
            table = {w: v.pop() for w, v in grouped.items()}
            b -= 1
            changed = True
            if b - a == 0:
                break
        # left contraction
        grouped = {}
        for word, k in table.items():
            grouped.setdefault(word[1:], set()).add(k)
        if b - a > 0 and all(len(v) == 1 for v in grouped.values()):
            table = {w: v.pop() for w, v in grouped.items()}
            a += 1
            changed = True
    if b - a == 0:
        a = 0  # a constant cocycle has no anchor position
    return tuple(sorted((w, a, k) for w, k in table.items()))


def cocycle_validate(shift, pieces):
    """Check that the pieces partition the subshift and induce a bijection;
    return the canonical element."""
    elem = CocycleElement(shift, pieces)  # partition checked during refinement
    # bijectivity: shifted pieces must also partition
    shifted = [(w, s - k, k) for w, s, k in elem.pieces]
    a = min(s for w, s, k in shifted)
    b = max(s + len(w) for w, s, k in shifted)
    if a > 0:
        a = 0
    if b < 0:
        b = 0
    for word in shift.words(b - a, start=a):
        matches = [
            k for w, s, k in shifted if word[s - a : s - a + len(w)] == w
        ]
        if len(matches) != 1:
            raise NotBijective(
                "image cylinders overlap or miss on window %r" % word
            )
    return elem


def cocycle_identity(shift):
    return CocycleElement(shift, [("", 0, 0)])


def cocycle_compose(g, h):
    """g o h: k(x) = k_g(u^{k_h(x)} x) + k_h(x)."""
    if g.shift != h.shift:
        raise ValueError("elements over different subshifts")
    shift = g.shift
    ga, gb = g.span()
    out = []
    for w, s, j in h.pieces:
        lo = min(s, ga + j, 0)
        hi = max(s + len(w), gb + j, 0)
        fixed = {s + t: w[t] for t in range(len(w))}
        for word in shift.words(hi - lo, fixed=fixed, start=lo):
            # the translate u^{k_h} repositions g's window by j
            gword = word[ga + j - lo : gb + j - lo]
            out.append((word, lo, j + g._value_on(gword, ga)))
    return CocycleElement(shift, out)


def cocycle_inverse(g):
    """Inverse element: value -k on the translated window of each piece."""
    return CocycleElement(g.shift, [(w, s - k, -k) for w, s, k in g.pieces])


def cocycle_power(g, m):
    if m == 0:
        return cocycle_identity(g.shift)
    base = g if m > 0 else cocycle_inverse(g)
    out = base
    for _ in range(abs(m) - 1):
        out = cocycle_compose(out, base)
    return out


def cocycle_support(g):
    """Windows where the cocycle is nonzero (the support is clopen)."""
    return tuple((w, s, k) for w, s, k in g.pieces if k != 0)


class BlockCode:
    """A sliding block code between subshifts, given by a radius and a local
    rule on admissible (2r+1)-windows."""

    __slots__ = ("src", "dst", "radius", "rule")

    def __init__(self, src, dst, radius, rule):
        self.src = src
        self.dst = dst
        self.radius = int(radius)
        self.rule = dict(rule)

    @classmethod
    def identity(cls, shift):
        return cls(shift, shift, 0, {a: a for a in shift.alphabet})

    def local(self, window):
        if window not in self.rule:
            raise RuleIncomplete("no rule for admissible window %r" % window)
        return self.rule[window]

    def apply_word(self, w):
        """Image of a source word (shorter by 2*radius)."""
        r = self.radius
        return "".join(self.local(w[i - r : i + r + 1]) for i in range(r, len(w) - r))

    def apply_point(self, x):
        """Image of a BiPoint (the code commutes with the shift)."""
        r = self.radius
        a = x.start - len(x.left) - r
        b = x.start + len(x.center) + len(x.right) + r

        def out_symbol(i):
            return self.local(x.window_word(i - r, i + r + 1))

        center = "".join(out_symbol(i) for i in range(a, b))
        left = "".join(out_symbol(a - len(x.left) + j) for j in range(len(x.left)))
        right = "".join(out_symbol(b + j) for j in range(len(x.right)))
        return BiPoint(self.dst, left, center, right, a)


def factor_code_check(code, depth):
    """Every admissible source word of the given length must map to an
    admissible target word.  Shift-commutation is structural; surjectivity
    is not decided here."""
    if depth < 2 * code.radius + 1:
        raise ValueError("depth must cover the code window")
    for w in code.src.words(depth):
        if not code.dst.language(code.apply_word(w)):
            return False
    return True


def embed_via_factor(v, code, g, max_power=16):
    """The element rho(g) with rho(g)(x) = v^{k_g(q(x))}(x) on the support
    of v and identity elsewhere, as a cocycle over the outer subshift.

    v is a full-group element of the outer subshift, q the block code from
    the outer to the inner subshift, g a full-group element of the inner
    subshift."""
    if v.shift != code.src or g.shift != code.dst:
        raise ValueError("mismatched subshifts")
    shift = v.shift
    r = code.radius
    values = g.value_range()
    if any(abs(m) > max_power for m in values):
        raise UnsupportedIteration("cocycle value exceeds the iteration bound")
    powers = {m: cocycle_power(v, m) for m in values}
    # pull back g's windows through the code
    pulled = []
    for w, s, k in g.pieces:
        lo, hi = s - r, s + len(w) + r
        for word in shift.words(hi - lo, start=lo):
            if code.apply_word(word) == w:
                pulled.append((word, lo, k))
    spans = [p.span() for p in powers.values()] + [v.span()]
    lo = min([s for w, s, k in pulled] + [a for a, b in spans] + [0])
    hi = max([s + len(w) for w, s, k in pulled] + [b for a, b in spans] + [0])
    out = []
    for word in shift.words(hi - lo, start=lo):
        m = None
        for w, s, k in pulled:
            if word[s - lo : s - lo + len(w)] == w:
                m = k
                break
        if m is None:
            raise WindowUndetermined("pulled-back windows do not cover %r" % word)
        va, vb = v.span()
        in_support = v._value_on(word[va - lo : vb - lo], va) != 0
        if not in_support:
            out.append((word, lo, 0))
        else:
            pa, pb = powers[m].span()
            out.append((word, lo, powers[m]._value_on(word[pa - lo : pb - lo], pa)))
    return CocycleElement(shift, out)
