"""Exact coefficient fields: F_p, its finite extensions, QQ, and algebraic
extensions of QQ.

A :class:`FieldCtx` owns all arithmetic; a :class:`FieldElement` is a thin
(ctx, rep) wrapper.  Representations are canonical so that ``==`` and ``hash``
are structural:

* prime field      -- ``int`` in ``[0, p)``
* rationals        -- ``fractions.Fraction`` (always reduced)
* extension        -- tuple of base reps, fixed length = step degree

Extension arithmetic reduces against a monic defining polynomial whose
irreducibility is verified at construction (Rabin's test over finite fields,
factorization in characteristic zero).  Finite contexts produced by
:meth:`FieldCtx.extend_with_root` are always single-step extensions of F_p;
growing F_{p^k} lands in a flattened F_{p^{k*d}} together with an embedding
of the old context, so arithmetic never pays for a tower.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .errors import (
    CharZeroPthRoot,
    DivisionByZero,
    IncompatibleContexts,
    NoEmbedding,
    TowerLimitExceeded,
)

MAX_TOWER_DEPTH = 4

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond any usable characteristic."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Polynomials over raw reps.  These helpers power extension arithmetic and the
# irreducibility test; ``ctx`` is always the coefficient context and vectors
# are lists of its reps, lowest degree first, trailing zeros stripped.
# ---------------------------------------------------------------------------


def _rp_trim(ctx: "FieldCtx", v: list) -> list:
    while v and ctx.ris_zero(v[-1]):
        v.pop()
    return v


def _rp_add(ctx: "FieldCtx", a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = ctx.radd(out[i], c)
    return _rp_trim(ctx, out)


def _rp_neg(ctx: "FieldCtx", a: list) -> list:
    return [ctx.rneg(c) for c in a]


def _rp_sub(ctx: "FieldCtx", a: list, b: list) -> list:
    return _rp_add(ctx, a, _rp_neg(ctx, b))


def _rp_scale(ctx: "FieldCtx", c, a: list) -> list:
    if ctx.ris_zero(c):
        return []
    return _rp_trim(ctx, [ctx.rmul(c, x) for x in a])


def _rp_mul(ctx: "FieldCtx", a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [ctx.rzero] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ctx.ris_zero(ca):
            continue
        for j, cb in enumerate(b):
            out[i + j] = ctx.radd(out[i + j], ctx.rmul(ca, cb))
    return _rp_trim(ctx, out)


def _rp_divmod(ctx: "FieldCtx", a: list, b: list) -> tuple[list, list]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    r = list(a)
    db, inv_lead = len(b) - 1, ctx.rinv(b[-1])
    q = [ctx.rzero] * max(len(r) - db, 0)
    while len(r) - 1 >= db and r:
        c = ctx.rmul(r[-1], inv_lead)
        k = len(r) - 1 - db
        q[k] = c
        for j in range(db + 1):
            r[k + j] = ctx.rsub(r[k + j], ctx.rmul(c, b[j]))
        _rp_trim(ctx, r)
    return _rp_trim(ctx, q), r


def _rp_rem(ctx: "FieldCtx", a: list, b: list) -> list:
    return _rp_divmod(ctx, a, b)[1]


def _rp_monic(ctx: "FieldCtx", a: list) -> list:
    if not a:
        return a
    return _rp_scale(ctx, ctx.rinv(a[-1]), a)


def _rp_gcd(ctx: "FieldCtx", a: list, b: list) -> list:
    a, b = list(a), list(b)
    while b:
        a, b = b, _rp_rem(ctx, a, b)
    return _rp_monic(ctx, a)


def _rp_pow_mod(ctx: "FieldCtx", base: list, e: int, mod: list) -> list:
    result = [ctx.rone]
    acc = _rp_rem(ctx, list(base), mod)
    while e:
        if e & 1:
            result = _rp_rem(ctx, _rp_mul(ctx, result, acc), mod)
        acc = _rp_rem(ctx, _rp_mul(ctx, acc, acc), mod)
        e >>= 1
    return result


def _rp_eval(ctx: "FieldCtx", a: list, x):
    acc = ctx.rzero
    for c in reversed(a):
        acc = ctx.radd(ctx.rmul(acc, x), c)
    return acc


def _rp_is_irreducible(ctx: "FieldCtx", mod: list) -> bool:
    """Rabin's criterion for a monic polynomial over a finite context."""
    n = len(mod) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    q = ctx.order
    assert q is not None
    x_poly = [ctx.rzero, ctx.rone]
    checkpoints = {n // ell for ell in _prime_divisors(n)}
    h = x_poly
    for i in range(1, n + 1):
        h = _rp_pow_mod(ctx, h, q, mod)
        if i in checkpoints:
            g = _rp_gcd(ctx, _rp_sub(ctx, h, x_poly), mod)
            if len(g) - 1 > 0:
                return False
    return h == x_poly


# ---------------------------------------------------------------------------
# Contexts
# ---------------------------------------------------------------------------

_CTX_CACHE: dict = {}
_FLAT_CACHE: dict[tuple[int, int], "FieldCtx"] = {}


class FieldCtx:
    """One arithmetic world.  Interned: equal keys give the identical object."""

    __slots__ = (
        "kind",
        "char",
        "order",
        "base",
        "modulus",
        "gen_name",
        "deg_step",
        "absdegree",
        "depth",
        "rzero",
        "rone",
        "zero",
        "one",
        "_key",
        "_embed_cache",
    )

    def __init__(self, *, _token=None, **attrs):
        if _token is not _NEW_TOKEN:
            raise TypeError("use FieldCtx.prime / FieldCtx.rationals / ctx.extend")
        for name in self.__slots__:
            if name.startswith("_") and name != "_key":
                continue
            object.__setattr__(self, name, attrs.get(name))
        object.__setattr__(self, "_key", attrs["_key"])
        object.__setattr__(self, "_embed_cache", {})
        object.__setattr__(self, "zero", FieldElement(self, self.rzero))
        object.__setattr__(self, "one", FieldElement(self, self.rone))

    # -- construction -------------------------------------------------------

    @staticmethod
    def prime(p: int) -> "FieldCtx":
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        key = ("prime", p)
        ctx = _CTX_CACHE.get(key)
        if ctx is None:
            ctx = FieldCtx(
                _token=_NEW_TOKEN,
                kind="prime",
                char=p,
                order=p,
                base=None,
                modulus=None,
                gen_name=None,
                deg_step=1,
                absdegree=1,
                depth=0,
                rzero=0,
                rone=1 % p,
                _key=key,
            )
            _CTX_CACHE[key] = ctx
        return ctx

    @staticmethod
    def rationals() -> "FieldCtx":
        key = ("rationals",)
        ctx = _CTX_CACHE.get(key)
        if ctx is None:
            ctx = FieldCtx(
                _token=_NEW_TOKEN,
                kind="rationals",
                char=0,
                order=None,
                base=None,
                modulus=None,
                gen_name=None,
                deg_step=1,
                absdegree=1,
                depth=0,
                rzero=Fraction(0),
                rone=Fraction(1),
                _key=key,
            )
            _CTX_CACHE[key] = ctx
        return ctx

    def extend(
        self,
        modulus,
        gen_name: str | None = None,
        *,
        max_depth: int = MAX_TOWER_DEPTH,
        _verified: bool = False,
    ) -> "FieldCtx":
        """Extension by a root of ``modulus`` (irreducible over this context).

        ``modulus`` is a sequence of elements of this context (or anything
        with such a ``.coeffs``), constant term first.  It is made monic.
        Irreducibility is checked here unless the caller already factored.
        """
        coeffs = list(getattr(modulus, "coeffs", modulus))
        reps = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.ctx is not self:
                    raise IncompatibleContexts("modulus coefficients from another context")
                reps.append(c.rep)
            elif isinstance(c, int):
                reps.append(self.rfrom_int(c))
            else:
                raise TypeError(f"bad modulus coefficient {c!r}")
        _rp_trim(self, reps)
        n = len(reps) - 1
        if n < 2:
            raise ValueError("extension degree must be at least 2")
        if self.depth + 1 > max_depth:
            raise TowerLimitExceeded(
                f"tower depth {self.depth + 1} exceeds the cap {max_depth}"
            )
        reps = _rp_monic(self, reps)
        if not _verified:
            if self.char > 0:
                if not _rp_is_irreducible(self, reps):
                    raise ValueError("modulus is reducible")
            else:
                from . import unipoly as _up

                f = _up.UniPoly(self, [FieldElement(self, r) for r in reps])
                if not f.is_irreducible():
                    raise ValueError("modulus is reducible")
        if gen_name is None:
            gen_name = chr(ord("a") + self.depth)
        key = ("ext", self._key, tuple(reps), gen_name)
        ctx = _CTX_CACHE.get(key)
        if ctx is None:
            zero = tuple([self.rzero] * n)
            one = tuple([self.rone] + [self.rzero] * (n - 1))
            ctx = FieldCtx(
                _token=_NEW_TOKEN,
                kind="extension",
                char=self.char,
                order=None if self.order is None else self.order**n,
                base=self,
                modulus=tuple(reps),
                gen_name=gen_name,
                deg_step=n,
                absdegree=self.absdegree * n,
                depth=self.depth + 1,
                rzero=zero,
                rone=one,
                _key=key,
            )
            _CTX_CACHE[key] = ctx
        return ctx

    def extend_with_root(self, poly) -> tuple["FieldCtx", "FieldElement", Callable]:
        """Smallest context containing a root of ``poly`` (a univariate over
        this context).

        Returns ``(new_ctx, root, embed_fn)``.  If a root already lives here
        the context comes back unchanged with the identity embedding.  The
        root and the enlarged context are canonical, so repeated runs agree.
        """
        from . import unipoly as _up

        if not isinstance(poly, _up.UniPoly):
            poly = _up.UniPoly(self, list(poly))
        if poly.ctx is not self:
            raise IncompatibleContexts("polynomial over another context")
        if poly.degree() < 1:
            raise ValueError("need a nonconstant polynomial")
        factors = poly.factor()
        linear = [g for g, _ in factors if g.degree() == 1]
        if linear:
            roots = [-g.coeffs[0] for g in linear]
            root = min(roots, key=lambda e: e.sort_key())
            return self, root, lambda e: e
        pick = min(
            (g for g, _ in factors),
            key=lambda g: (g.degree(), tuple(c.sort_key() for c in g.coeffs)),
        )
        if self.char > 0:
            target = _flat_finite_ctx(self.char, self.absdegree * pick.degree())

            def emb(e: "FieldElement", _t=target) -> "FieldElement":
                return embed(e, _t)

            lifted = _up.UniPoly(target, [emb(c) for c in pick.coeffs])
            roots = lifted.roots()
            assert roots, "irreducible factor must split in the flattened field"
            return target, roots[0], emb
        target = self.extend(pick.coeffs, _verified=True)

        def emb0(e: "FieldElement", _t=target) -> "FieldElement":
            return embed(e, _t)

        return target, target.gen(), emb0

    def gen(self) -> "FieldElement":
        if self.kind != "extension":
            raise ValueError("context has no generator")
        rep = [self.base.rzero] * self.deg_step
        rep[1] = self.base.rone
        return FieldElement(self, tuple(rep))

    # -- rep-level arithmetic ------------------------------------------------

    def radd(self, a, b):
        k = self.kind
        if k == "prime":
            return (a + b) % self.char
        if k == "rationals":
            return a + b
        base = self.base
        return tuple(base.radd(x, y) for x, y in zip(a, b))

    def rneg(self, a):
        k = self.kind
        if k == "prime":
            return -a % self.char
        if k == "rationals":
            return -a
        base = self.base
        return tuple(base.rneg(x) for x in a)

    def rsub(self, a, b):
        k = self.kind
        if k == "prime":
            return (a - b) % self.char
        if k == "rationals":
            return a - b
        base = self.base
        return tuple(base.rsub(x, y) for x, y in zip(a, b))

    def rmul(self, a, b):
        k = self.kind
        if k == "prime":
            return a * b % self.char
        if k == "rationals":
            return a * b
        prod = _rp_mul(self.base, list(a), list(b))
        return self._pad(self._reduce(prod))

    def rinv(self, a):
        k = self.kind
        if k == "prime":
            if a == 0:
                raise DivisionByZero("inverse of zero")
            return pow(a, -1, self.char)
        if k == "rationals":
            if a == 0:
                raise DivisionByZero("inverse of zero")
            return 1 / a
        base = self.base
        v = _rp_trim(base, list(a))
        if not v:
            raise DivisionByZero("inverse of zero")
        # Extended Euclid against the modulus, tracking only the Bezout
        # coefficient of ``v``; the gcd is a nonzero constant because the
        # modulus is irreducible and deg v < deg modulus.
        r0, r1 = list(self.modulus), v
        u0, u1 = [], [base.rone]
        while r1:
            q, rem = _rp_divmod(base, r0, r1)
            r0, r1 = r1, rem
            u0, u1 = u1, _rp_sub(base, u0, _rp_mul(base, q, u1))
        u = _rp_scale(base, base.rinv(r0[0]), u0)
        u = _rp_rem(base, u, list(self.modulus))
        return self._pad(u)

    def rpow(self, a, e: int):
        if e < 0:
            return self.rpow(self.rinv(a), -e)
        result, acc = self.rone, a
        while e:
            if e & 1:
                result = self.rmul(result, acc)
            acc = self.rmul(acc, acc)
            e >>= 1
        return result

    def rfrom_int(self, n: int):
        k = self.kind
        if k == "prime":
            return n % self.char
        if k == "rationals":
            return Fraction(n)
        rep = [self.base.rzero] * self.deg_step
        rep[0] = self.base.rfrom_int(n)
        return tuple(rep)

    def rfrom_fraction(self, q: Fraction):
        if self.kind == "rationals":
            return q
        num = self.rfrom_int(q.numerator)
        den = self.rfrom_int(q.denominator)
        return self.rmul(num, self.rinv(den))

    def ris_zero(self, a) -> bool:
        return a == self.rzero

    def rsort_key(self, a):
        if self.kind == "extension":
            return tuple(self.base.rsort_key(x) for x in a)
        return a

    def _pad(self, v: list) -> tuple:
        n = self.deg_step
        if len(v) < n:
            v = v + [self.base.rzero] * (n - len(v))
        return tuple(v)

    def _reduce(self, v: list) -> list:
        n, m, base = self.deg_step, self.modulus, self.base
        for i in range(len(v) - 1, n - 1, -1):
            c = v[i]
            if not base.ris_zero(c):
                for j in range(n):
                    v[i - n + j] = base.rsub(v[i - n + j], base.rmul(c, m[j]))
        del v[n:]
        return v

    # -- elements ------------------------------------------------------------

    def from_int(self, n: int) -> "FieldElement":
        return FieldElement(self, self.rfrom_int(n))

    def from_fraction(self, q: Fraction) -> "FieldElement":
        return FieldElement(self, self.rfrom_fraction(q))

    def pth_root(self, a: "FieldElement") -> "FieldElement":
        """Inverse Frobenius; total on finite fields, an error in char 0."""
        if self.char == 0:
            raise CharZeroPthRoot("p-th roots need positive characteristic")
        if a.ctx is not self:
            raise IncompatibleContexts("element from another context")
        assert self.order is not None
        return FieldElement(self, self.rpow(a.rep, self.order // self.char))

    def element_at(self, i: int) -> "FieldElement":
        if self.order is None:
            raise ValueError("cannot index an infinite field")
        if not 0 <= i < self.order:
            raise IndexError(i)
        if self.kind == "prime":
            return FieldElement(self, i)
        base, q = self.base, self.base.order
        rep = []
        for _ in range(self.deg_step):
            rep.append(base.element_at(i % q).rep)
            i //= q
        return FieldElement(self, tuple(rep))

    def elements(self) -> Iterator["FieldElement"]:
        if self.order is None:
            raise ValueError("cannot enumerate an infinite field")
        for i in range(self.order):
            yield self.element_at(i)

    def sample(self, rng) -> "FieldElement":
        if self.order is not None:
            return self.element_at(rng.randrange(self.order))
        if self.kind == "rationals":
            return FieldElement(self, Fraction(rng.randint(-9, 9), rng.randint(1, 4)))
        base = self.base
        return FieldElement(
            self, tuple(base.sample(rng).rep for _ in range(self.deg_step))
        )

    # -- presentation ---------------------------------------------------------

    def descriptor(self) -> str:
        if self.kind == "prime":
            return f"Fp:{self.char}"
        if self.kind == "rationals":
            return "QQ"
        if self.char > 0:
            return f"Fq:{self.char}^{self.absdegree}"
        names = []
        ctx: FieldCtx | None = self
        while ctx is not None and ctx.kind == "extension":
            names.append(ctx.gen_name)
            ctx = ctx.base
        return "QQ(" + ",".join(reversed(names)) + ")"

    def render_rep(self, a) -> str:
        k = self.kind
        if k == "prime":
            return str(a)
        if k == "rationals":
            return str(a)
        base, parts = self.base, []
        for i in range(self.deg_step - 1, -1, -1):
            c = a[i]
            if base.ris_zero(c):
                continue
            s = base.render_rep(c)
            if i == 0:
                parts.append(s)
                continue
            mono = self.gen_name if i == 1 else f"{self.gen_name}^{i}"
            if s == "1":
                parts.append(mono)
            elif s == "-1":
                parts.append("-" + mono)
            elif "+" in s or "-" in s[1:]:
                parts.append(f"({s})*{mono}")
            else:
                parts.append(f"{s}*{mono}")
        if not parts:
            return "0"
        return "+".join(parts).replace("+-", "-")

    def __repr__(self) -> str:
        return f"FieldCtx({self.descriptor()})"

    def __eq__(self, other) -> bool:
        return self is other or (
            isinstance(other, FieldCtx) and self._key == other._key
        )

    def __hash__(self) -> int:
        return hash(self._key)


_NEW_TOKEN = object()


def _flat_finite_ctx(p: int, n: int) -> FieldCtx:
    """F_{p^n} as a one-step extension of F_p with a canonical modulus.

    The modulus is the first monic irreducible of degree ``n`` in counter
    order (lower-degree coefficients vary fastest), so every run of every
    process picks the same field presentation.
    """
    if n == 1:
        return FieldCtx.prime(p)
    cached = _FLAT_CACHE.get((p, n))
    if cached is not None:
        return cached
    base = FieldCtx.prime(p)
    count = 0
    while True:
        digits, c = [], count
        for _ in range(n):
            digits.append(c % p)
            c //= p
        count += 1
        if c > 0:
            raise RuntimeError("irreducible search exhausted the digit space")
        if digits[0] == 0:
            continue
        mod = digits + [1]
        if _rp_is_irreducible(base, mod):
            ctx = base.extend(
                [FieldElement(base, r) for r in mod], "a", _verified=True
            )
            _FLAT_CACHE[(p, n)] = ctx
            return ctx


def embed(elem: "FieldElement", target: FieldCtx) -> "FieldElement":
    """Canonical embedding of an element into a larger context.

    Handles: the identity; constants from F_p or QQ; a context that is a
    stage of ``target``'s tower; and one-step finite extensions of the same
    prime field whose degree divides the target's.  Anything else raises
    :class:`NoEmbedding`.
    """
    src = elem.ctx
    if src is target:
        return elem
    if src.kind == "prime":
        if target.char != src.char:
            raise NoEmbedding(f"no map {src.descriptor()} -> {target.descriptor()}")
        return FieldElement(target, target.rfrom_int(elem.rep))
    if src.kind == "rationals":
        if target.char != 0:
            raise NoEmbedding(f"no map QQ -> {target.descriptor()}")
        return FieldElement(target, target.rfrom_fraction(elem.rep))
    # tower stage: pad upward step by step
    chain = []
    ctx: FieldCtx | None = target
    while ctx is not None:
        if ctx is src:
            rep = elem.rep
            for step in reversed(chain):
                lifted = [rep] + [step.base.rzero] * (step.deg_step - 1)
                rep = tuple(lifted)
            return FieldElement(target, rep)
        chain.append(ctx)
        ctx = ctx.base
    if (
        src.char > 0
        and src.kind == "extension"
        and src.base.kind == "prime"
        and target.kind == "extension"
        and target.base.kind == "prime"
        and target.char == src.char
        and target.absdegree % src.absdegree == 0
    ):
        rho = target._embed_cache.get(src._key)
        if rho is None:
            rho = _canonical_root_rep(src, target)
            target._embed_cache[src._key] = rho
        acc = target.rzero
        for c in reversed(elem.rep):
            acc = target.radd(target.rmul(acc, rho), target.rfrom_int(c))
        return FieldElement(target, acc)
    raise NoEmbedding(f"no map {src.descriptor()} -> {target.descriptor()}")


def _canonical_root_rep(src: FieldCtx, target: FieldCtx):
    """Rep of the smallest root (by sort key) of ``src``'s modulus in ``target``."""
    from . import unipoly as _up

    coeffs = [FieldElement(target, target.rfrom_int(c)) for c in src.modulus]
    roots = _up.UniPoly(target, coeffs).roots()
    if not roots:
        raise NoEmbedding(
            f"{src.descriptor()} modulus has no root in {target.descriptor()}"
        )
    return roots[0].rep


class FieldElement:
    """A field element: a context plus a canonical representation."""

    __slots__ = ("ctx", "rep")

    def __init__(self, ctx: FieldCtx, rep):
        self.ctx = ctx
        self.rep = rep

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise IncompatibleContexts(
                    f"{self.ctx.descriptor()} vs {other.ctx.descriptor()}"
                )
            return other.rep
        if isinstance(other, int):
            return self.ctx.rfrom_int(other)
        if isinstance(other, Fraction):
            return self.ctx.rfrom_fraction(other)
        return NotImplemented

    def __add__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.radd(self.rep, rep))

    __radd__ = __add__

    def __sub__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.rsub(self.rep, rep))

    def __rsub__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.rsub(rep, self.rep))

    def __mul__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.rmul(self.rep, rep))

    __rmul__ = __mul__

    def __truediv__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.rmul(self.rep, self.ctx.rinv(rep)))

    def __rtruediv__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.rmul(rep, self.ctx.rinv(self.rep)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.rneg(self.rep))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.rpow(self.rep, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.rinv(self.rep))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise IncompatibleContexts(
                    f"{self.ctx.descriptor()} vs {other.ctx.descriptor()}"
                )
            return self.rep == other.rep
        if isinstance(other, (int, Fraction)):
            return self.rep == self._coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx._key, self.rep))

    def __bool__(self) -> bool:
        return not self.ctx.ris_zero(self.rep)

    def is_zero(self) -> bool:
        return self.ctx.ris_zero(self.rep)

    def is_one(self) -> bool:
        return self.rep == self.ctx.rone

    def sort_key(self):
        return self.ctx.rsort_key(self.rep)

    def __str__(self) -> str:
        return self.ctx.render_rep(self.rep)

    def __repr__(self) -> str:
        return f"<{self.ctx.render_rep(self.rep)} in {self.ctx.descriptor()}>"
