#include "cubicloc/counting.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cubicloc/admissible.hpp"
#include "cubicloc/local_solubility.hpp"

namespace cubicloc {

namespace {

using u8 = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

// ---------------------------------------------------------------------------
// Montgomery arithmetic mod an odd u32, for one-off cube tests at primes too
// large to carry a residue bitmap.
// ---------------------------------------------------------------------------
struct Mont32 {
    u32 n{};     // odd modulus
    u32 ninv{};  // -n^{-1} mod 2^32
    u32 r2{};    // 2^64 mod n
    u32 one{};   // 2^32 mod n

    explicit Mont32(u32 mod) : n(mod) {
        u32 inv = mod;  // Newton iterations, inverse mod 2^32
        for (int i = 0; i < 5; ++i) inv *= 2u - mod * inv;
        ninv = ~inv + 1u;
        r2 = static_cast<u32>((static_cast<unsigned __int128>(1) << 64) % mod);
        one = static_cast<u32>((static_cast<u64>(1) << 32) % mod);
    }
    u32 redc(u64 t) const {
        const u32 m = static_cast<u32>(t) * ninv;
        const u64 s = (t + static_cast<u64>(m) * n) >> 32;
        return s >= n ? static_cast<u32>(s - n) : static_cast<u32>(s);
    }
    u32 mul(u32 a, u32 b) const { return redc(static_cast<u64>(a) * b); }
    u32 pow_mont(u32 base_mont, u64 e) const {
        u32 r = one, b = base_mont;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    // x^((n-1)/3) mod n for prime n = 1 mod 3, out of Montgomery form
    u32 cube_power(u32 x) const {
        return redc(pow_mont(redc(static_cast<u64>(x % n) * r2), (n - 1) / 3));
    }
};

// Cube classes mod a prime p > Lq dividing a. class(n) in {0,1,2} relative
// to a fixed primitive cube root h of unity mod p; n is a cube iff class 0,
// and class is additive under multiplication.
struct LargePivotInfo {
    Mont32 mont;
    u32 h{};
    std::vector<u8> c_class;  // classes of the cofactors 1..cmax

    LargePivotInfo(u32 p, u32 cmax) : mont(p) {
        u32 probe = 2;
        while (h == 0 || h == 1) h = mont.cube_power(probe++);
        c_class.assign(cmax + 1, 0);
        for (u32 c = 1; c <= cmax; ++c) c_class[c] = classify(c);
    }
    u8 classify(u32 x) const {
        const u32 t = mont.cube_power(x);
        if (t == 1) return 0;
        return t == h ? 1 : 2;
    }
};

// ---------------------------------------------------------------------------
// Shared immutable context for one FastPath call.
//
// Every counted pair lands in exactly one of three passes, split by the
// largest prime factor = 1 mod 3 on each side:
//   pass 1: a has no such factor; scan the compacted valid-b list.
//   pass 2: rows grouped by a's largest such prime p ("pivot"); b runs over
//           the arithmetic progressions b = cube residue (mod p), which makes
//           the dominant cube test free.
//   pass 3: b = q*c with q > Lq (q unique since Lq >= sqrt(B)); a runs over
//           the progressions a = cube residue (mod q).
// Lq is the bitmap bound: cube-residue bitmaps are precomputed for primes
// <= Lq, larger primes get transient residue lists or Montgomery classes.
// ---------------------------------------------------------------------------

constexpr int kNumMaskPrimes = 25;  // primes <= 101 except 3
constexpr u32 kMaskPrimes[kNumMaskPrimes] = {2,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                             47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};

constexpr u64 kMask25 = (1ull << 25) - 1;

struct Engine {
    u64 A{}, B{}, maxAB{};
    u32 Lq{};
    u32 cmax{};  // bound on the cofactor c = b/q in pass 3

    AdmissibleTable adm;

    std::vector<u32> smallq;        // primes = 1 mod 3, <= min(Lq, maxAB)
    std::vector<u64> cube_bits;     // concatenated cube-residue bitmaps
    std::vector<u64> cube_bit_off;  // bit offset per smallq index
    std::vector<u32> largeq;        // primes = 1 mod 3 in (Lq, B]

    // per n in [0, maxAB]: csr_off:30 | csr_len:3 | phaseA:1 | n%27:5 | mask25:25
    std::vector<u64> packed;
    std::vector<u16> csr;            // smallq indices of the = 1 mod 3 factors
    std::vector<u64> base_valid;     // bitmap: square-free and 3 not dividing n
    std::vector<u32> pivot_val;      // largest = 1 mod 3 prime factor (0 if none)

    std::vector<u32> cb_value;       // compacted phase-A b universe
    std::vector<u64> cb_packed;

    std::vector<u32> pivot_slot;     // a -> 1 + index into pivot_info (0 = small pivot)
    std::vector<LargePivotInfo> pivot_info;

    const SieveTables* tables{};

    bool base_valid_bit(u64 n) const { return (base_valid[n >> 6] >> (n & 63)) & 1; }
    bool cube_bit(u32 qidx, u32 r) const {
        const u64 off = cube_bit_off[qidx] + r;
        return (cube_bits[off >> 6] >> (off & 63)) & 1;
    }
};

u64 isqrt_u64(u64 n) {
    auto r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Append the (q-1)/3 distinct cube residues mod prime q to out (unsorted).
// scratch is a q-bit map, left cleared on return.
void cube_residues(u32 q, std::vector<u32>& out, std::vector<u64>& scratch) {
    out.clear();
    const std::size_t words = (q + 63u) / 64u;
    if (scratch.size() < words) scratch.assign(words, 0);
    // x^3 mod q by finite differences, no division in the loop
    u64 c = 1, d1 = 7 % q, d2 = 12 % q;  // at x = 1: x^3, 3x^2+3x+1, 6x+6
    for (u32 x = 1; x < q; ++x) {
        const u32 r = static_cast<u32>(c);
        if (!((scratch[r >> 6] >> (r & 63)) & 1)) {
            scratch[r >> 6] |= 1ull << (r & 63);
            out.push_back(r);
        }
        c += d1;
        if (c >= q) c -= q;
        d1 += d2;
        if (d1 >= q) d1 -= q;
        d2 += 6;
        if (d2 >= q) d2 -= q;
    }
    for (u32 r : out) scratch[r >> 6] &= ~(1ull << (r & 63));
}

Engine build_engine(const SieveTables& tables, u64 A, u64 B) {
    Engine e;
    e.tables = &tables;
    e.A = A;
    e.B = B;
    e.maxAB = std::max(A, B);
    const u64 n = e.maxAB;

    // Lq >= sqrt(maxAB) keeps the large factor unique on both sides; past
    // mid scale a larger bound pays off by shrinking the Montgomery work.
    e.Lq = static_cast<u32>(
        std::max<u64>({10'000, isqrt_u64(n) + 1, std::min<u64>(100'000, n / 10)}));
    e.cmax = static_cast<u32>(std::max<u64>(1, B / e.Lq));

    static const AdmissibleTable shared_table = AdmissibleTable::generate();
    e.adm = shared_table;

    for (u32 p : tables.primes()) {
        if (p % 3 != 1 || p > n) continue;
        if (p <= e.Lq)
            e.smallq.push_back(p);
        else if (p <= B)
            e.largeq.push_back(p);
    }

    // cube-residue bitmaps for the small primes
    {
        u64 bits = 0;
        e.cube_bit_off.resize(e.smallq.size());
        for (std::size_t i = 0; i < e.smallq.size(); ++i) {
            e.cube_bit_off[i] = bits;
            bits += e.smallq[i];
        }
        e.cube_bits.assign((bits + 63) / 64 + 1, 0);
        std::vector<u32> rs;
        std::vector<u64> scratch;
        for (std::size_t i = 0; i < e.smallq.size(); ++i) {
            cube_residues(e.smallq[i], rs, scratch);
            for (u32 r : rs) {
                const u64 off = e.cube_bit_off[i] + r;
                e.cube_bits[off >> 6] |= 1ull << (off & 63);
            }
        }
    }

    e.base_valid.assign(n / 64 + 2, 0);
    for (u64 v = 1; v <= n; ++v)
        if (tables.squarefree(v) && v % 3 != 0) e.base_valid[v >> 6] |= 1ull << (v & 63);

    // csr of small = 1 mod 3 factors; largest = 1 mod 3 factor of each n
    std::vector<u32> csr_len(n + 1, 0);
    e.pivot_val.assign(n + 1, 0);
    std::vector<u8> has_large(n + 1, 0);
    for (u32 q : e.smallq)
        for (u64 m = q; m <= n; m += q) {
            ++csr_len[m];
            e.pivot_val[m] = q;  // ascending q leaves the largest in place
        }
    for (u32 p : tables.primes()) {
        if (p % 3 != 1 || p <= e.Lq || p > n) continue;
        for (u64 m = p; m <= n; m += p) {
            e.pivot_val[m] = p;
            if (m <= B) has_large[m] = 1;
        }
    }

    std::vector<u64> csr_off(n + 2, 0);
    for (u64 v = 1; v <= n; ++v) csr_off[v + 1] = csr_off[v] + csr_len[v];
    e.csr.resize(csr_off[n + 1]);
    {
        std::vector<u64> cursor(csr_off.begin(), csr_off.begin() + static_cast<std::ptrdiff_t>(n + 1));
        for (std::size_t i = 0; i < e.smallq.size(); ++i)
            for (u64 m = e.smallq[i]; m <= n; m += e.smallq[i])
                e.csr[cursor[m]++] = static_cast<u16>(i);
    }

    e.packed.assign(n + 1, 0);
    for (int i = 0; i < kNumMaskPrimes; ++i)
        for (u64 m = kMaskPrimes[i]; m <= n; m += kMaskPrimes[i]) e.packed[m] |= 1ull << i;
    for (u64 v = 1; v <= n; ++v) {
        const bool phase_a = e.base_valid_bit(v) && !has_large[v];
        e.packed[v] |= static_cast<u64>(v % 27) << 25;
        e.packed[v] |= static_cast<u64>(phase_a) << 30;
        e.packed[v] |= static_cast<u64>(csr_len[v]) << 31;
        e.packed[v] |= csr_off[v] << 34;
    }

    for (u64 b = 1; b <= B; ++b)
        if ((e.packed[b] >> 30) & 1) {
            e.cb_value.push_back(static_cast<u32>(b));
            e.cb_packed.push_back(e.packed[b]);
        }

    // Montgomery contexts for a-values whose pivot exceeds Lq (pass 3 only)
    e.pivot_slot.assign(A + 1, 0);
    if (!e.largeq.empty()) {
        for (u64 a = 1; a <= A; ++a) {
            if (!e.base_valid_bit(a)) continue;
            const u32 p = e.pivot_val[a];
            if (p > e.Lq) {
                e.pivot_info.emplace_back(p, e.cmax);
                e.pivot_slot[a] = static_cast<u32>(e.pivot_info.size());
            }
        }
    }
    return e;
}

// ---------------------------------------------------------------------------
// Per-thread worker over a contiguous a-chunk [a_lo, a_hi].
// ---------------------------------------------------------------------------
struct Worker {
    const Engine& e;
    u64 a_lo, a_hi;
    u64 count = 0;

    std::vector<u32> stamp;     // b -> row token marking a shared prime > 101
    std::vector<u8> cube_ok_a;  // per small prime q: is row's a a cube mod q
    std::vector<u32> rlist;     // cube residues of the current group prime
    std::vector<u64> scratch;
    std::vector<u32> qmod_small;

    // current row
    u32 adm_mask{};
    u64 mask_a{};
    u32 secondary_p[8];   // small = 1 mod 3 factors of a besides the pivot
    u32 secondary_i[8];   // their smallq indices
    int n_secondary{};
    bool stamps_active{};  // row has a prime factor > 101 that is 2 mod 3

    Worker(const Engine& eng, u64 lo, u64 hi) : e(eng), a_lo(lo), a_hi(hi) {
        stamp.assign(e.B + 1, 0);
        cube_ok_a.assign(e.smallq.size(), 0);
    }

    void run() {
        if (a_lo > a_hi) return;
        pass1();
        pass2();
        pass3();
    }

    u32 smallq_index(u32 q) const {
        return static_cast<u32>(
            std::lower_bound(e.smallq.begin(), e.smallq.end(), q) - e.smallq.begin());
    }

    void setup_row(u64 a, u32 pivot) {
        mask_a = e.packed[a] & kMask25;
        adm_mask = e.adm.row_mask(static_cast<int>(a % 27));
        n_secondary = 0;
        stamps_active = false;
        u64 m = a;
        while (m > 1) {
            const u32 p = e.tables->smallest_prime_factor(m);
            m /= p;
            while (m % p == 0) m /= p;
            if (p % 3 == 1) {
                if (p != pivot) {
                    secondary_p[n_secondary] = p;
                    secondary_i[n_secondary] = smallq_index(p);
                    ++n_secondary;
                }
            } else if (p > 101) {
                // block multiples of a shared prime that the 25-bit mask misses
                stamps_active = true;
                for (u64 t = p; t <= e.B; t += p) stamp[t] = static_cast<u32>(a);
            }
        }
        const std::size_t nq = e.smallq.size();
        for (std::size_t i = 0; i < nq; ++i)
            cube_ok_a[i] =
                static_cast<u8>(e.cube_bit(static_cast<u32>(i), static_cast<u32>(a % e.smallq[i])));
    }

    bool b_side_ok(u64 packed_b) const {
        const int len = static_cast<int>((packed_b >> 31) & 7);
        const u64 off = packed_b >> 34;
        for (int j = 0; j < len; ++j)
            if (!cube_ok_a[e.csr[off + j]]) return false;
        return true;
    }

    // rows whose a has no prime factor = 1 mod 3
    void pass1() {
        const std::size_t nb = e.cb_value.size();
        for (u64 a = a_lo; a <= a_hi; ++a) {
            if (!e.base_valid_bit(a) || e.pivot_val[a] != 0) continue;
            setup_row(a, 0);
            const u32 tok = static_cast<u32>(a);
            for (std::size_t i = 0; i < nb; ++i) {
                const u64 pb = e.cb_packed[i];
                if (!((adm_mask >> ((pb >> 25) & 31)) & 1)) continue;
                if (pb & mask_a) continue;
                if (stamps_active && stamp[e.cb_value[i]] == tok) continue;
                if (b_side_ok(pb)) ++count;
            }
        }
    }

    // rows grouped by a's pivot p; b over the cube-residue progressions mod p
    void pass2() {
        for (u32 p : e.tables->primes()) {
            if (p > e.A) break;
            if (p % 3 != 1) continue;
            const u64 first = ((a_lo + p - 1) / p) * static_cast<u64>(p);
            bool have_rlist = false;
            for (u64 a = first; a <= a_hi; a += p) {
                if (!e.base_valid_bit(a) || e.pivot_val[a] != p) continue;
                if (!have_rlist) {
                    cube_residues(p, rlist, scratch);
                    if (p > e.B)
                        rlist.erase(std::remove_if(rlist.begin(), rlist.end(),
                                                   [&](u32 r) { return r > e.B; }),
                                    rlist.end());
                    have_rlist = true;
                }
                setup_row(a, p);
                const u32 tok = static_cast<u32>(a);
                const u32 p27 = p % 27;
                const u64 prefetch_span = 8 * static_cast<u64>(p);
                for (u32 r : rlist) {
                    u32 b27 = r % 27;
                    for (u64 b = r; b <= e.B; b += p) {
                        if (b + prefetch_span <= e.B)
                            __builtin_prefetch(&e.packed[b + prefetch_span]);
                        const u32 cur27 = b27;
                        b27 += p27;
                        if (b27 >= 27) b27 -= 27;
                        if (!((adm_mask >> cur27) & 1)) continue;
                        const u64 pb = e.packed[b];
                        if (!((pb >> 30) & 1)) continue;
                        if (pb & mask_a) continue;
                        if (stamps_active && stamp[b] == tok) continue;
                        bool ok = true;
                        for (int j = 0; j < n_secondary && ok; ++j)
                            ok = e.cube_bit(secondary_i[j],
                                            static_cast<u32>(b % secondary_p[j]));
                        if (ok && b_side_ok(pb)) ++count;
                    }
                }
            }
        }
    }

    // pairs whose b carries a prime q > Lq: b = q*c
    void pass3() {
        struct Cofactor {
            u32 c;
            u32 qc27;
            u32 mask_c;
            u32 csr_off;
            u32 csr_len;
        };
        std::vector<Cofactor> cs;
        for (u32 q : e.largeq) {
            const u32 climit = static_cast<u32>(e.B / q);
            const u32 q27 = q % 27;
            cs.clear();
            for (u32 c = 1; c <= climit; ++c) {
                if (!e.base_valid_bit(c)) continue;
                const u64 pc = e.packed[c];
                cs.push_back({c, (q27 * (c % 27)) % 27, static_cast<u32>(pc & kMask25),
                              static_cast<u32>(pc >> 34), static_cast<u32>((pc >> 31) & 7)});
            }
            if (cs.empty()) continue;
            cube_residues(q, rlist, scratch);
            const std::size_t nq = e.smallq.size();
            qmod_small.resize(nq);
            for (std::size_t i = 0; i < nq; ++i) qmod_small[i] = q % e.smallq[i];

            for (u32 r : rlist) {
                u64 a = r;
                if (a < a_lo) a += ((a_lo - a + q - 1) / q) * static_cast<u64>(q);
                if (a > a_hi || a > e.A) continue;
                u32 a27 = static_cast<u32>(a % 27);
                const u64 hi = std::min<u64>(a_hi, e.A);
                for (; a <= hi; a += q) {
                    const u32 cur27 = a27;
                    a27 += q27;
                    if (a27 >= 27) a27 -= 27;
                    if (!e.base_valid_bit(a)) continue;
                    visit_pass3_a(a, cur27, q, cs);
                }
            }
        }
    }

    template <typename CofactorT>
    void visit_pass3_a(u64 a, u32 a27, u32 q, const std::vector<CofactorT>& cs) {
        const u64 pa = e.packed[a];
        const u64 mask_a_loc = pa & kMask25;
        const int alen = static_cast<int>((pa >> 31) & 7);
        const u64 aoff = pa >> 34;
        const u32 adm_row = e.adm.row_mask(static_cast<int>(a27));
        const u32 slot = e.pivot_slot[a];
        int class_q = -1;  // class of q mod the large pivot, computed lazily

        for (const auto& cf : cs) {
            if (!((adm_row >> cf.qc27) & 1)) continue;
            if (mask_a_loc & cf.mask_c) continue;
            // b-side for c's factors: a must be a cube mod each
            bool ok = true;
            for (u32 j = 0; j < cf.csr_len && ok; ++j) {
                const u16 qi = e.csr[cf.csr_off + j];
                ok = e.cube_bit(qi, static_cast<u32>(a % e.smallq[qi]));
            }
            if (!ok) continue;
            // a-side small factors: b = q*c must be a cube mod each
            for (int j = 0; j < alen && ok; ++j) {
                const u16 qi = e.csr[aoff + j];
                const u32 s = e.smallq[qi];
                const u32 bm = static_cast<u32>(
                    (static_cast<u64>(qmod_small[qi]) * (cf.c % s)) % s);
                ok = e.cube_bit(qi, bm);
            }
            if (!ok) continue;
            // a-side large pivot, additive cube classes mod that prime
            if (slot) {
                const LargePivotInfo& info = e.pivot_info[slot - 1];
                if (class_q < 0) class_q = info.classify(q % info.mont.n);
                if ((class_q + info.c_class[cf.c]) % 3 != 0) continue;
            }
            ++count;
        }
    }
};

u64 oracle_count(const SieveTables& tables, u64 A, u64 B) {
    u64 total = 0;
    for (u64 a = 1; a <= A; ++a) {
        if (!tables.squarefree(a) || a % 3 == 0) continue;
        const auto fa = tables.prime_factors(static_cast<u32>(a));
        for (u64 b = 1; b <= B; ++b) {
            if (!tables.squarefree(b) || b % 3 == 0) continue;
            if (std::gcd(a, b) != 1) continue;
            bool ok = brute_force_oracle_at_p(static_cast<std::int64_t>(a),
                                              static_cast<std::int64_t>(b), 3);
            for (std::size_t i = 0; ok && i < fa.size(); ++i)
                ok = brute_force_oracle_at_p(static_cast<std::int64_t>(a),
                                             static_cast<std::int64_t>(b), fa[i]);
            if (ok)
                for (u32 p : tables.prime_factors(static_cast<u32>(b))) {
                    if (!ok) break;
                    ok = brute_force_oracle_at_p(static_cast<std::int64_t>(a),
                                                 static_cast<std::int64_t>(b), p);
                }
            if (ok) ++total;
        }
    }
    return total;
}

}  // namespace

CountResult count_soluble_pairs(const SieveTables& tables, u64 A, u64 B, CountMode mode,
                                unsigned threads) {
    if (A < 1 || B < 1) throw std::invalid_argument("count_soluble_pairs: A, B must be >= 1");
    if (A > tables.limit() || B > tables.limit())
        throw std::length_error("count_soluble_pairs: range exceeds the sieve limit");

    const auto t0 = std::chrono::steady_clock::now();
    CountResult res;
    res.A = A;
    res.B = B;
    res.method = mode;

    if (mode == CountMode::Oracle) {
        res.count = oracle_count(tables, A, B);
    } else {
        const Engine engine = build_engine(tables, A, B);
        unsigned T = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
        T = static_cast<unsigned>(std::min<u64>(T, A));
        std::vector<u64> partial(T, 0);
        if (T == 1) {
            Worker w(engine, 1, A);
            w.run();
            partial[0] = w.count;
        } else {
            std::vector<std::thread> pool;
            const u64 width = (A + T - 1) / T;
            for (unsigned t = 0; t < T; ++t) {
                const u64 lo = 1 + static_cast<u64>(t) * width;
                const u64 hi = std::min<u64>(A, lo + width - 1);
                pool.emplace_back([&engine, &partial, t, lo, hi] {
                    Worker w(engine, lo, hi);
                    w.run();
                    partial[t] = w.count;
                });
            }
            for (auto& th : pool) th.join();
        }
        // chunk totals are exact integers; summing in chunk order makes the
        // result independent of the thread count
        res.count = std::accumulate(partial.begin(), partial.end(), u64{0});
    }

    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace cubicloc
