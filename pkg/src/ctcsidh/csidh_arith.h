/* Fixed-width Montgomery-form arithmetic modulo p and the CSIDH hot loops.
 *
 * Elements are arrays of MAXL 64-bit limbs, of which the first f->n are used.
 * Every operation increments the field's tally with the same M/S/A units as
 * the Python reference code, and the formula sequences match it step for step.
 * No branch or memory index depends on element values.
 */
#ifndef CSIDH_ARITH_H
#define CSIDH_ARITH_H

#include <stdint.h>
#include <stdlib.h>
#include <string.h>

#define MAXL 8

typedef unsigned __int128 u128;
typedef uint64_t fe[MAXL];

typedef struct {
    uint64_t m, s, a;
} tally_t;

typedef struct {
    int n;
    uint64_t p[MAXL];
    uint64_t pinv; /* -p^-1 mod 2^64 */
    uint64_t r2[MAXL];
    uint64_t one[MAXL]; /* R mod p, i.e. 1 in Montgomery form */
    tally_t t;
} field_t;

typedef struct { fe X, Z; } pt_t;
typedef struct { fe a24p, a24m, c24; } curve_t;

static inline void fe_copy(const field_t *f, uint64_t *r, const uint64_t *a)
{
    memcpy(r, a, sizeof(uint64_t) * f->n);
}

/* r = a - p if a >= p, with a < 2p given as n limbs plus a carry limb */
static inline void fe_reduce_once(const field_t *f, uint64_t *r, const uint64_t *a, uint64_t hi)
{
    uint64_t d[MAXL];
    uint64_t borrow = 0;
    for (int i = 0; i < f->n; i++) {
        u128 t = (u128)a[i] - f->p[i] - borrow;
        d[i] = (uint64_t)t;
        borrow = (uint64_t)(t >> 64) & 1;
    }
    /* keep a when the subtraction borrowed past the carry limb */
    uint64_t keep = -(uint64_t)(borrow & ~hi & 1);
    for (int i = 0; i < f->n; i++)
        r[i] = (a[i] & keep) | (d[i] & ~keep);
}

static inline void fe_add_raw(const field_t *f, uint64_t *r, const uint64_t *a, const uint64_t *b)
{
    uint64_t s[MAXL];
    uint64_t carry = 0;
    for (int i = 0; i < f->n; i++) {
        u128 t = (u128)a[i] + b[i] + carry;
        s[i] = (uint64_t)t;
        carry = (uint64_t)(t >> 64);
    }
    fe_reduce_once(f, r, s, carry);
}

static inline void fe_sub_raw(const field_t *f, uint64_t *r, const uint64_t *a, const uint64_t *b)
{
    uint64_t borrow = 0;
    uint64_t d[MAXL];
    for (int i = 0; i < f->n; i++) {
        u128 t = (u128)a[i] - b[i] - borrow;
        d[i] = (uint64_t)t;
        borrow = (uint64_t)(t >> 64) & 1;
    }
    uint64_t mask = -borrow, carry = 0;
    for (int i = 0; i < f->n; i++) {
        u128 t = (u128)d[i] + (f->p[i] & mask) + carry;
        r[i] = (uint64_t)t;
        carry = (uint64_t)(t >> 64);
    }
}

/* CIOS Montgomery multiplication: r = a*b/R mod p */
static inline void fe_mul_raw(const field_t *f, uint64_t *r, const uint64_t *a, const uint64_t *b)
{
    const int n = f->n;
    uint64_t t[MAXL + 2];
    memset(t, 0, sizeof(t));
    for (int i = 0; i < n; i++) {
        u128 c = 0;
        for (int j = 0; j < n; j++) {
            c = (u128)a[j] * b[i] + t[j] + (uint64_t)(c >> 64);
            t[j] = (uint64_t)c;
        }
        c = (u128)t[n] + (uint64_t)(c >> 64);
        t[n] = (uint64_t)c;
        t[n + 1] = (uint64_t)(c >> 64);

        uint64_t m = t[0] * f->pinv;
        c = (u128)m * f->p[0] + t[0];
        for (int j = 1; j < n; j++) {
            c = (u128)m * f->p[j] + t[j] + (uint64_t)(c >> 64);
            t[j - 1] = (uint64_t)c;
        }
        c = (u128)t[n] + (uint64_t)(c >> 64);
        t[n - 1] = (uint64_t)c;
        t[n] = t[n + 1] + (uint64_t)(c >> 64);
    }
    fe_reduce_once(f, r, t, t[n]);
}

static inline void fe_add(field_t *f, uint64_t *r, const uint64_t *a, const uint64_t *b)
{
    f->t.a++;
    fe_add_raw(f, r, a, b);
}

static inline void fe_sub(field_t *f, uint64_t *r, const uint64_t *a, const uint64_t *b)
{
    f->t.a++;
    fe_sub_raw(f, r, a, b);
}

static inline void fe_mul(field_t *f, uint64_t *r, const uint64_t *a, const uint64_t *b)
{
    f->t.m++;
    fe_mul_raw(f, r, a, b);
}

static inline void fe_sqr(field_t *f, uint64_t *r, const uint64_t *a)
{
    f->t.s++;
    fe_mul_raw(f, r, a, a);
}

static inline void fe_to_mont(const field_t *f, uint64_t *r, const uint64_t *a)
{
    fe_mul_raw(f, r, a, f->r2);
}

static inline void fe_from_mont(const field_t *f, uint64_t *r, const uint64_t *a)
{
    uint64_t u[MAXL];
    memset(u, 0, sizeof(u));
    u[0] = 1;
    fe_mul_raw(f, r, a, u);
}

static inline void fe_cswap(const field_t *f, uint64_t *a, uint64_t *b, uint64_t bit)
{
    uint64_t mask = -bit;
    for (int i = 0; i < f->n; i++) {
        uint64_t t = (a[i] ^ b[i]) & mask;
        a[i] ^= t;
        b[i] ^= t;
    }
}

/* left-to-right square-and-multiply over the ebits low bits of e (top bit set) */
static void k_pow(field_t *f, uint64_t *r, const uint64_t *a, const uint64_t *e, int ebits)
{
    fe acc, base;
    fe_copy(f, base, a);
    fe_copy(f, acc, a);
    for (int i = ebits - 2; i >= 0; i--) {
        fe_sqr(f, acc, acc);
        if ((e[i / 64] >> (i % 64)) & 1) /* exponent bits are public */
            fe_mul(f, acc, acc, base);
    }
    fe_copy(f, r, acc);
}

static inline void k_xdbl(field_t *f, pt_t *r, const pt_t *P, const curve_t *E)
{
    fe t0, t1, t2;
    fe_add(f, t0, P->X, P->Z);
    fe_sub(f, t1, P->X, P->Z);
    fe_sqr(f, t0, t0);
    fe_sqr(f, t1, t1);
    fe_mul(f, t2, E->c24, t1);
    fe_mul(f, r->X, t2, t0);
    fe_sub(f, t0, t0, t1);
    fe_mul(f, t1, E->a24p, t0);
    fe_add(f, t1, t1, t2);
    fe_mul(f, r->Z, t1, t0);
}

static inline void k_xadd(field_t *f, pt_t *r, const pt_t *P, const pt_t *Q, const pt_t *D)
{
    fe t0, t1, t2, t3;
    fe_sub(f, t0, P->X, P->Z);
    fe_add(f, t1, Q->X, Q->Z);
    fe_mul(f, t0, t0, t1);
    fe_add(f, t2, P->X, P->Z);
    fe_sub(f, t3, Q->X, Q->Z);
    fe_mul(f, t2, t2, t3);
    fe_add(f, t1, t0, t2);
    fe_sub(f, t3, t0, t2);
    fe_sqr(f, t1, t1);
    fe_sqr(f, t3, t3);
    fe_mul(f, t0, D->Z, t1);
    fe_mul(f, r->Z, D->X, t3);
    fe_copy(f, r->X, t0);
}

#define CHAIN_REGS 32

/* Apply packed chains in sequence: code holds 4 bytes per step (op, a, b, diff),
 * lens[c] steps for chain c.  Returns -1 if a chain is too long. */
static int k_xmul(field_t *f, pt_t *P, const curve_t *E, const uint8_t *code,
                  const int *lens, int nchains)
{
    pt_t vals[CHAIN_REGS];
    for (int c = 0; c < nchains; c++) {
        int len = lens[c];
        if (len + 1 > CHAIN_REGS)
            return -1;
        vals[0] = *P;
        for (int s = 0; s < len; s++, code += 4) {
            if (code[0] == 0)
                k_xdbl(f, &vals[s + 1], &vals[code[1]], E);
            else
                k_xadd(f, &vals[s + 1], &vals[code[1]], &vals[code[2]], &vals[code[3]]);
        }
        *P = vals[len];
    }
    return 0;
}

static void k_ladder(field_t *f, pt_t *r, const uint64_t *k, int nbits, const pt_t *P,
                     const curve_t *E)
{
    pt_t R0, R1;
    memset(&R0, 0, sizeof(R0));
    fe_copy(f, R0.X, f->one);
    R1 = *P;
    for (int i = nbits - 1; i >= 0; i--) {
        uint64_t b = (k[i / 64] >> (i % 64)) & 1;
        fe_cswap(f, R0.X, R1.X, b);
        fe_cswap(f, R0.Z, R1.Z, b);
        k_xadd(f, &R1, &R0, &R1, P);
        k_xdbl(f, &R0, &R0, E);
        fe_cswap(f, R0.X, R1.X, b);
        fe_cswap(f, R0.Z, R1.Z, b);
    }
    *r = R0;
}

/* y-line doubling and differential addition; pt_t fields hold (Y, T) here */
static inline void k_ydbl(field_t *f, pt_t *r, const pt_t *P, const curve_t *E)
{
    fe t0, t1, t2, t3;
    fe_sqr(f, t0, P->X);
    fe_sqr(f, t1, P->Z);
    fe_mul(f, t2, E->c24, t0);
    fe_mul(f, t3, t2, t1);
    fe_sub(f, t1, t1, t0);
    fe_mul(f, t0, E->a24p, t1);
    fe_add(f, t0, t0, t2);
    fe_mul(f, t0, t0, t1);
    fe_sub(f, r->X, t3, t0);
    fe_add(f, r->Z, t3, t0);
}

static inline void k_ydiffadd(field_t *f, pt_t *r, const pt_t *P, const pt_t *Q, const pt_t *D)
{
    fe t0, t1, t2, t3;
    fe_mul(f, t0, P->X, Q->Z);
    fe_mul(f, t1, Q->X, P->Z);
    fe_add(f, t2, t0, t1);
    fe_sqr(f, t2, t2);
    fe_sub(f, t3, t0, t1);
    fe_sqr(f, t3, t3);
    fe_sub(f, t0, D->Z, D->X);
    fe_mul(f, t0, t0, t2);
    fe_add(f, t1, D->Z, D->X);
    fe_mul(f, t1, t1, t3);
    fe_sub(f, r->X, t0, t1);
    fe_add(f, r->Z, t0, t1);
}

/* Odd-degree isogeny with kernel <R>: writes the codomain to *Eout and maps
 * pts[0..npts) in place.  Returns -1 on allocation failure. */
static int k_isogeny(field_t *f, curve_t *Eout, const curve_t *E, const pt_t *R, int ell,
                     pt_t *pts, int npts)
{
    int k = (ell - 1) / 2;
    pt_t *K = (pt_t *)malloc(sizeof(pt_t) * (size_t)k);
    if (K == NULL)
        return -1;
    fe_sub(f, K[0].X, R->X, R->Z);
    fe_add(f, K[0].Z, R->X, R->Z);
    if (k >= 2)
        k_ydbl(f, &K[1], &K[0], E);
    for (int i = 2; i < k; i++)
        k_ydiffadd(f, &K[i], &K[i - 1], &K[0], &K[i - 2]);

    fe py, pt, a, d;
    uint64_t e[MAXL];
    memset(e, 0, sizeof(e));
    e[0] = (uint64_t)ell;
    int ebits = 0;
    while ((uint64_t)ell >> ebits)
        ebits++;
    fe_copy(f, py, K[0].X);
    fe_copy(f, pt, K[0].Z);
    for (int i = 1; i < k; i++) {
        fe_mul(f, py, py, K[i].X);
        fe_mul(f, pt, pt, K[i].Z);
    }
    k_pow(f, a, E->a24p, e, ebits);
    k_pow(f, d, E->a24m, e, ebits);
    for (int i = 0; i < 3; i++) {
        fe_sqr(f, pt, pt);
        fe_sqr(f, py, py);
    }
    fe_mul(f, Eout->a24p, a, pt);
    fe_mul(f, Eout->a24m, d, py);
    fe_sub(f, Eout->c24, Eout->a24p, Eout->a24m);

    for (int j = 0; j < npts; j++) {
        pt_t *Q = &pts[j];
        fe qy, qt, tpy, tmy, plus, minus, t1, t2, s, dd;
        fe_sub(f, qy, Q->X, Q->Z);
        fe_add(f, qt, Q->X, Q->Z);
        fe_add(f, tpy, qt, qy);
        fe_sub(f, tmy, qt, qy);
        for (int i = 0; i < k; i++) {
            fe_mul(f, t1, qt, K[i].X);
            fe_mul(f, t2, qy, K[i].Z);
            fe_add(f, s, t1, t2);
            fe_sub(f, dd, t1, t2);
            if (i == 0) {
                fe_copy(f, plus, s);
                fe_copy(f, minus, dd);
            } else {
                fe_mul(f, plus, plus, s);
                fe_mul(f, minus, minus, dd);
            }
        }
        fe_sqr(f, plus, plus);
        fe_sqr(f, minus, minus);
        fe_mul(f, plus, tpy, plus);
        fe_mul(f, minus, tmy, minus);
        fe_sub(f, qy, plus, minus);
        fe_add(f, qt, plus, minus);
        fe_add(f, Q->X, qt, qy);
        fe_sub(f, Q->Z, qt, qy);
    }
    free(K);
    return 0;
}

#endif
