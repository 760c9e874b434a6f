//! Lexicographic enumeration of bounded integer vectors.

use std::ops::ControlFlow;

/// Visits every `w ∈ [lo, hi]^n` with `Σ w = total`, in lexicographic order.
pub fn for_each_with_sum<B>(
    n: usize,
    total: u64,
    lo: u64,
    hi: u64,
    mut visit: impl FnMut(&[u64]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if n == 0 || lo > hi || total < lo * n as u64 || total > hi * n as u64 {
        return ControlFlow::Continue(());
    }
    let mut w = vec![0u64; n];
    recurse(&mut w, 0, total, lo, hi, &mut visit)
}

fn recurse<B>(
    w: &mut [u64],
    idx: usize,
    remaining: u64,
    lo: u64,
    hi: u64,
    visit: &mut impl FnMut(&[u64]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let rest = (w.len() - idx - 1) as u64;
    if rest == 0 {
        w[idx] = remaining;
        return visit(w);
    }
    let min = lo.max(remaining.saturating_sub(hi * rest));
    let max = hi.min(remaining - lo * rest);
    for x in min..=max {
        w[idx] = x;
        recurse(w, idx + 1, remaining - x, lo, hi, visit)?;
    }
    ControlFlow::Continue(())
}

/// Visits every `w ∈ [lo, hi]^n` in lexicographic order.
pub fn for_each_in_box<B>(n: usize, lo: u64, hi: u64, mut visit: impl FnMut(&[u64]) -> ControlFlow<B>) -> ControlFlow<B> {
    if n == 0 || lo > hi {
        return ControlFlow::Continue(());
    }
    let mut w = vec![lo; n];
    loop {
        visit(&w)?;
        let mut i = n;
        loop {
            if i == 0 {
                return ControlFlow::Continue(());
            }
            i -= 1;
            if w[i] < hi {
                w[i] += 1;
                for x in w.iter_mut().skip(i + 1) {
                    *x = lo;
                }
                break;
            }
        }
    }
}

/// All vectors in `ℤ_{≥0}^n` with `Σ ≤ total`, ordered by sum, then lexicographically.
pub fn graded(n: usize, total: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for s in 0..=total {
        let _ = for_each_with_sum::<()>(n, s, 0, s, |w| {
            out.push(w.to_vec());
            ControlFlow::Continue(())
        });
    }
    out
}
