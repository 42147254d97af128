//! Independent enumerations used to cross-check the recursive shuffle.

use crate::algebra::{add_term, AlgebraHandle, Basis, LinComb, Prec};
use crate::coeffs::Scalar;
use crate::free_rb::{FreeRbElement, PureTensor};

/// Every interleaving of `a` and `b`, one per choice of the positions taken
/// by `a`. There are `C(|a|+|b|, |a|)` of them, duplicates included.
pub fn shuffles<T: Clone>(a: &[T], b: &[T]) -> Vec<Vec<T>> {
    let total = a.len() + b.len();
    let mut out = Vec::new();
    let mut positions: Vec<usize> = (0..a.len()).collect();
    loop {
        let mut word = Vec::with_capacity(total);
        let (mut i, mut j) = (0, 0);
        for slot in 0..total {
            if i < a.len() && positions[i] == slot {
                word.push(a[i].clone());
                i += 1;
            } else {
                word.push(b[j].clone());
                j += 1;
            }
        }
        out.push(word);
        // next combination in lexicographic order
        let k = a.len();
        let mut idx = k;
        loop {
            if idx == 0 {
                return out;
            }
            idx -= 1;
            if positions[idx] < total - k + idx {
                break;
            }
        }
        positions[idx] += 1;
        for t in idx + 1..k {
            positions[t] = positions[t - 1] + 1;
        }
    }
}

/// One step of a lattice path from `(0, 0)` to `(|a|, |b|)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    A,
    B,
    Both,
}

/// Every path with unit steps east, north and diagonal.
pub fn delannoy_paths(m: usize, n: usize) -> Vec<Vec<Step>> {
    let mut out = Vec::new();
    let mut stack = vec![(0usize, 0usize, Vec::new())];
    while let Some((i, j, path)) = stack.pop() {
        if i == m && j == n {
            out.push(path);
            continue;
        }
        if i < m {
            let mut p = path.clone();
            p.push(Step::A);
            stack.push((i + 1, j, p));
        }
        if j < n {
            let mut p = path.clone();
            p.push(Step::B);
            stack.push((i, j + 1, p));
        }
        if i < m && j < n {
            let mut p = path;
            p.push(Step::Both);
            stack.push((i + 1, j + 1, p));
        }
    }
    out
}

/// The mixable shuffle of two pure tensors computed as a sum over lattice
/// paths: heads are merged, then each path interleaves the tails, each
/// diagonal step merging one factor from each side with weight `λ`.
pub fn mixable_shuffle_by_paths(h: &AlgebraHandle, a: &PureTensor, b: &PureTensor) -> FreeRbElement {
    let inner = h.inner().expect("sha handle");
    let prec = if h.is_exact() { Prec::Exact } else { h.default_prec() };
    let lambda = h.lambda().clone();
    let one = h.ring().one();
    let (ta, tb) = (&a.0[1..], &b.0[1..]);
    let mut out: LinComb<PureTensor> = LinComb::new();
    for path in delannoy_paths(ta.len(), tb.len()) {
        let merges = path.iter().filter(|s| **s == Step::Both).count();
        let weight = lambda.pow(merges as u32);
        if weight.is_zero() {
            continue;
        }
        let mut factors: Vec<LinComb<Basis>> = vec![inner.mul_basis(&a.0[0], &b.0[0], prec)];
        let (mut i, mut j) = (0, 0);
        for step in path {
            let lc = match step {
                Step::A => {
                    i += 1;
                    single(ta[i - 1].clone(), &one)
                }
                Step::B => {
                    j += 1;
                    single(tb[j - 1].clone(), &one)
                }
                Step::Both => {
                    i += 1;
                    j += 1;
                    inner.mul_basis(&ta[i - 1], &tb[j - 1], prec)
                }
            };
            factors.push(lc);
        }
        let mut partial: Vec<(Vec<Basis>, Scalar)> = vec![(Vec::new(), weight)];
        for lc in &factors {
            let mut next = Vec::new();
            for (t, c) in &partial {
                for (k, a) in lc {
                    let mut t2 = t.clone();
                    t2.push(k.clone());
                    next.push((t2, c * a));
                }
            }
            partial = next;
        }
        for (t, c) in partial {
            add_term(&mut out, PureTensor(t), c);
        }
    }
    FreeRbElement::from_terms(out, prec)
}

fn single(k: Basis, one: &Scalar) -> LinComb<Basis> {
    let mut lc = LinComb::new();
    lc.insert(k, one.clone());
    lc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shuffle_counts_are_binomial() {
        for m in 0..=5usize {
            for n in 0..=5usize {
                let a: Vec<usize> = (0..m).collect();
                let b: Vec<usize> = (100..100 + n).collect();
                let all = shuffles(&a, &b);
                assert_eq!(
                    all.len() as u64,
                    crate::coeffs::binomial((m + n) as u64, m as u64)
                        .to_string()
                        .parse::<u64>()
                        .unwrap()
                );
                let distinct: std::collections::HashSet<_> = all.iter().collect();
                assert_eq!(distinct.len(), all.len());
            }
        }
    }

    #[test]
    fn delannoy_numbers() {
        // D(m, n): 1, 3, 13, 63 on the diagonal
        let d: Vec<usize> = (0..4).map(|k| delannoy_paths(k, k).len()).collect();
        assert_eq!(d, vec![1, 3, 13, 63]);
    }
}
