# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel backend; same interface and operation tallies as ``_pykernel``."""

from libc.stdint cimport uint8_t, uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

from ._types import CurveCoeffs, PointXZ

NAME = "c"


cdef extern from "csidh_arith.h":
    enum: MAXL
    ctypedef struct tally_t:
        uint64_t m, s, a
    ctypedef struct field_t:
        int n
        uint64_t p[8]
        uint64_t pinv
        uint64_t r2[8]
        uint64_t one[8]
        tally_t t
    ctypedef struct pt_t:
        uint64_t X[8]
        uint64_t Z[8]
    ctypedef struct curve_t:
        uint64_t a24p[8]
        uint64_t a24m[8]
        uint64_t c24[8]
    void fe_to_mont(const field_t *f, uint64_t *r, const uint64_t *a)
    void fe_from_mont(const field_t *f, uint64_t *r, const uint64_t *a)
    void k_pow(field_t *f, uint64_t *r, const uint64_t *a, const uint64_t *e, int ebits)
    int k_xmul(field_t *f, pt_t *P, const curve_t *E, const uint8_t *code, const int *lens,
               int nchains)
    void k_ladder(field_t *f, pt_t *r, const uint64_t *k, int nbits, const pt_t *P,
                  const curve_t *E)
    int k_isogeny(field_t *f, curve_t *Eout, const curve_t *E, const pt_t *R, int ell,
                  pt_t *pts, int npts)


cdef class _Field:
    cdef field_t f
    cdef readonly object p
    cdef readonly int nb

    def __cinit__(self, p):
        cdef int n = (p.bit_length() + 63) // 64
        if n > MAXL:
            raise ValueError("modulus too large for the compiled kernel")
        if p % 2 == 0:
            raise ValueError("modulus must be odd")
        self.p = p
        self.nb = 8 * n
        memset(&self.f, 0, sizeof(field_t))
        self.f.n = n
        self.f.pinv = (-pow(p, -1, 1 << 64)) % (1 << 64)
        _raw(self, self.f.p, p)
        _raw(self, self.f.r2, pow(2, 128 * n, p))
        _raw(self, self.f.one, pow(2, 64 * n, p))


cdef inline void _raw(_Field F, uint64_t *out, object x):
    cdef bytes b = x.to_bytes(F.nb, "little")
    memcpy(out, <const char *>b, F.nb)


cdef inline void _load(_Field F, uint64_t *out, object x):
    cdef bytes b = (x % F.p).to_bytes(F.nb, "little")
    memcpy(out, <const char *>b, F.nb)
    fe_to_mont(&F.f, out, out)


cdef inline object _store(_Field F, const uint64_t *a):
    cdef uint64_t tmp[8]
    fe_from_mont(&F.f, tmp, a)
    return int.from_bytes((<char *>tmp)[:F.nb], "little")


cdef dict _fields = {}


cdef _Field _field(object p):
    F = _fields.get(p)
    if F is None:
        F = _Field(p)
        _fields[p] = F
    return <_Field>F


cdef inline void _load_curve(_Field F, curve_t *E, object coeffs):
    _load(F, E.a24p, coeffs[0])
    _load(F, E.a24m, coeffs[1])
    _load(F, E.c24, coeffs[2])


cdef inline void _load_point(_Field F, pt_t *P, object pt):
    _load(F, P.X, pt[0])
    _load(F, P.Z, pt[1])


cdef inline object _store_point(_Field F, const pt_t *P):
    return PointXZ(_store(F, P.X), _store(F, P.Z))


cdef inline void _flush(_Field F, object ctx):
    ops = ctx.ops
    ops.mul_count += F.f.t.m
    ops.sqr_count += F.f.t.s
    ops.add_count += F.f.t.a
    F.f.t.m = 0
    F.f.t.s = 0
    F.f.t.a = 0


def xmul(ctx, P, E, chains):
    cdef _Field F = _field(ctx.p)
    cdef pt_t Pt
    cdef curve_t Ec
    cdef bytes code = b"".join([c.code for c in chains])
    cdef int nchains = len(chains)
    cdef int *lens = <int *>malloc(sizeof(int) * max(nchains, 1))
    if lens == NULL:
        raise MemoryError()
    cdef int i, rc
    try:
        for i in range(nchains):
            lens[i] = len(chains[i].steps)
        _load_point(F, &Pt, P)
        _load_curve(F, &Ec, E)
        rc = k_xmul(&F.f, &Pt, &Ec, <const uint8_t *><const char *>code, lens, nchains)
    finally:
        free(lens)
    _flush(F, ctx)
    if rc != 0:
        raise ValueError("addition chain too long for the compiled kernel")
    return _store_point(F, &Pt)


def ladder(ctx, k, P, E, nbits):
    cdef _Field F = _field(ctx.p)
    cdef pt_t Pt, R
    cdef curve_t Ec
    cdef int nl = max((nbits + 63) // 64, 1)
    cdef uint64_t *kw = <uint64_t *>malloc(8 * nl)
    if kw == NULL:
        raise MemoryError()
    cdef bytes kb = k.to_bytes(8 * nl, "little")
    memcpy(kw, <const char *>kb, 8 * nl)
    _load_point(F, &Pt, P)
    _load_curve(F, &Ec, E)
    k_ladder(&F.f, &R, kw, nbits, &Pt, &Ec)
    free(kw)
    _flush(F, ctx)
    return _store_point(F, &R)


def isogeny(ctx, E, R, ell, points):
    cdef _Field F = _field(ctx.p)
    cdef curve_t Ec, Eo
    cdef pt_t Rt
    cdef int npts = len(points)
    cdef pt_t *pts = <pt_t *>malloc(sizeof(pt_t) * max(npts, 1))
    if pts == NULL:
        raise MemoryError()
    cdef int i, rc
    try:
        _load_curve(F, &Ec, E)
        _load_point(F, &Rt, R)
        for i in range(npts):
            _load_point(F, &pts[i], points[i])
        rc = k_isogeny(&F.f, &Eo, &Ec, &Rt, ell, pts, npts)
        if rc != 0:
            raise MemoryError()
        images = [_store_point(F, &pts[i]) for i in range(npts)]
    finally:
        free(pts)
        _flush(F, ctx)
    codomain = CurveCoeffs(_store(F, Eo.a24p), _store(F, Eo.a24m), _store(F, Eo.c24))
    return codomain, images


def power(ctx, a, e):
    if e == 0:
        return 1
    cdef _Field F = _field(ctx.p)
    cdef uint64_t ac[8]
    cdef uint64_t r[8]
    cdef int ebits = e.bit_length()
    cdef int nl = (ebits + 63) // 64
    cdef uint64_t *ew = <uint64_t *>malloc(8 * nl)
    if ew == NULL:
        raise MemoryError()
    cdef bytes eb = e.to_bytes(8 * nl, "little")
    memcpy(ew, <const char *>eb, 8 * nl)
    _load(F, ac, a)
    k_pow(&F.f, r, ac, ew, ebits)
    free(ew)
    _flush(F, ctx)
    return _store(F, r)
