//! Closed-walk counting by square-and-multiply over dense residue arrays.
//!
//! A walk segment of length `L` is summarized, for every pair of endpoints,
//! by a table indexed by `(#m appended, #starred arrivals)`. Only segments
//! that can still complete to a balanced cycle of length `2n` are kept
//! (`#m ≤ n`, `#f ≤ n`, `#starred ≤ n`). Counts are computed modulo several
//! primes and recombined by the Chinese remainder theorem, so the result is
//! exact.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use super::DeBruijnGraph;
use crate::exactalg::ExactInt;

/// Dense table of residues for one matrix entry.
#[derive(Clone)]
struct Table {
    data: Vec<u64>,
}

/// All entries of `A^len` modulo one prime.
struct ResidueMatrix {
    dim: usize,
    len: usize,
    m_len: usize,
    z_len: usize,
    entries: Vec<Option<Table>>,
}

#[derive(Clone, Copy)]
struct Shape {
    n: usize,
}

impl Shape {
    fn m_len(self, len: usize) -> usize {
        len.min(self.n) + 1
    }

    // starred nodes are never consecutive on a walk
    fn z_len(self, len: usize) -> usize {
        len.div_ceil(2).min(self.n) + 1
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit inputs.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct primes just below `2^bits`, enough that their product exceeds
/// `2^needed_bits`.
fn choose_primes(bits: u32, needed_bits: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut have = 0u64;
    let mut cand = (1u64 << bits) - 1;
    while have <= needed_bits {
        if is_prime(cand) {
            primes.push(cand);
            have += (bits - 1) as u64;
        }
        cand -= 2;
    }
    primes
}

impl ResidueMatrix {
    fn from_graph(graph: &DeBruijnGraph, shape: Shape) -> Self {
        let dim = graph.nodes().len();
        let (m_len, z_len) = (shape.m_len(1), shape.z_len(1));
        let mut entries = vec![None; dim * dim];
        for a in graph.arcs() {
            let mut data = vec![0u64; m_len * z_len];
            let m = (a.appended == super::Gender::M) as usize;
            data[m * z_len + a.starred as usize] = 1;
            entries[a.src * dim + a.dst] = Some(Table { data });
        }
        ResidueMatrix { dim, len: 1, m_len, z_len, entries }
    }

    /// Yields `(m, z, value)` of the nonzero cells of one entry.
    fn cells(&self, t: &Table) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for m in 0..self.m_len {
            for z in 0..self.z_len {
                let v = t.data[m * self.z_len + z];
                if v != 0 {
                    out.push((m, z, v));
                }
            }
        }
        out
    }

    fn mul(&self, other: &ResidueMatrix, shape: Shape, p: u64) -> ResidueMatrix {
        let dim = self.dim;
        let len = self.len + other.len;
        let (m_len, z_len) = (shape.m_len(len), shape.z_len(len));
        // fewest m's a surviving segment may carry: #f = len - #m ≤ n
        let m_min = len.saturating_sub(shape.n);
        let lhs: Vec<Option<Vec<(usize, usize, u64)>>> =
            self.entries.iter().map(|e| e.as_ref().map(|t| self.cells(t))).collect();
        let mut entries = vec![None; dim * dim];
        let mut acc = vec![0u128; m_len * z_len];
        for i in 0..dim {
            for j in 0..dim {
                let mut touched = false;
                for k in 0..dim {
                    let (Some(a), Some(b)) = (&lhs[i * dim + k], &other.entries[k * dim + j]) else {
                        continue;
                    };
                    touched = true;
                    for &(ma, za, va) in a {
                        let va = va as u128;
                        for mb in 0..other.m_len {
                            let m = ma + mb;
                            if m >= m_len {
                                break;
                            }
                            if m < m_min {
                                continue;
                            }
                            let row = &b.data[mb * other.z_len..(mb + 1) * other.z_len];
                            let zb_max = (z_len - za).min(other.z_len);
                            let out = &mut acc[m * z_len + za..m * z_len + za + zb_max];
                            for (o, &vb) in out.iter_mut().zip(&row[..zb_max]) {
                                *o += va * vb as u128;
                            }
                        }
                    }
                }
                if touched {
                    let data: Vec<u64> = acc.iter().map(|&x| (x % p as u128) as u64).collect();
                    if data.iter().any(|&x| x != 0) {
                        entries[i * dim + j] = Some(Table { data });
                    }
                    acc.iter_mut().for_each(|x| *x = 0);
                }
            }
        }
        ResidueMatrix { dim, len, m_len, z_len, entries }
    }

    /// `[#m = n, #starred = j] tr(self · other)` for `j = 0..=n`.
    fn balanced_trace_of_product(&self, other: &ResidueMatrix, shape: Shape, p: u64) -> Vec<u64> {
        let n = shape.n;
        let mut acc = vec![0u128; n + 1];
        for i in 0..self.dim {
            for k in 0..self.dim {
                let (Some(a), Some(b)) = (&self.entries[i * self.dim + k], &other.entries[k * self.dim + i])
                else {
                    continue;
                };
                for ma in 0..self.m_len {
                    let Some(mb) = n.checked_sub(ma) else { break };
                    if mb >= other.m_len {
                        continue;
                    }
                    for za in 0..self.z_len {
                        let va = a.data[ma * self.z_len + za] as u128;
                        if va == 0 {
                            continue;
                        }
                        for zb in 0..other.z_len.min(n + 1 - za.min(n + 1)) {
                            acc[za + zb] += va * b.data[mb * other.z_len + zb] as u128;
                        }
                    }
                }
            }
        }
        acc.into_iter().map(|x| (x % p as u128) as u64).collect()
    }
}

fn residues_for_prime(graph: &DeBruijnGraph, n: usize, p: u64) -> Vec<u64> {
    let shape = Shape { n };
    let base = ResidueMatrix::from_graph(graph, shape);
    // A^n by square-and-multiply, then the trace of A^n · A^n.
    let bits = usize::BITS - n.leading_zeros();
    let mut half = ResidueMatrix::from_graph(graph, shape);
    for b in (0..bits - 1).rev() {
        half = half.mul(&half, shape, p);
        if (n >> b) & 1 == 1 {
            half = half.mul(&base, shape, p);
        }
    }
    half.balanced_trace_of_product(&half, shape, p)
}

fn ceil_log2(x: u128) -> u32 {
    128 - x.saturating_sub(1).leading_zeros()
}

/// `[y^0 z^j] tr(A^{2n})` for `j = 0..=n`, where `A` is the weighted
/// adjacency matrix of `graph`. Requires `n ≥ 1`.
pub fn balanced_pattern_counts(graph: &DeBruijnGraph, n: usize) -> Vec<ExactInt> {
    assert!(n >= 1, "walks of length 2n need n >= 1");
    let dim = graph.nodes().len() as u128;
    // Largest number of products summed into one accumulator cell.
    let terms = dim * dim * (n as u128 + 1) * (n as u128 + 1);
    let prime_bits = ((127 - ceil_log2(terms + 1)) / 2).min(62);
    // Every count is at most the number of closed walks: dim · deg^(2n).
    let deg = graph.max_out_degree().max(2) as f64;
    let needed_bits = ((dim as f64).log2() + 2.0 * n as f64 * deg.log2()).ceil() as u64 + 1;
    let primes = choose_primes(prime_bits, needed_bits);

    let residues: Vec<Vec<u64>> = primes.iter().map(|&p| residues_for_prime(graph, n, p)).collect();
    (0..=n).map(|j| crt(primes.iter().zip(&residues).map(|(&p, r)| (r[j], p)))).collect()
}

/// Smallest nonnegative `x` with `x ≡ r (mod p)` for every pair.
fn crt(pairs: impl Iterator<Item = (u64, u64)>) -> ExactInt {
    let mut x = BigUint::zero();
    let mut modulus = BigUint::from(1u32);
    for (r, p) in pairs {
        let x_mod_p = (&x % p).to_u64().expect("reduced");
        let m_mod_p = (&modulus % p).to_u64().expect("reduced");
        let diff = (r + p - x_mod_p) % p;
        let step = mul_mod(diff, pow_mod(m_mod_p, p - 2, p), p);
        x += &modulus * step;
        modulus *= p;
    }
    BigInt::from(x)
}
