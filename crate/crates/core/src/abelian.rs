//! Cyclic decompositions of finite abelian groups given by enumeration.
//!
//! Used to put structure constants on subrings and quotient rings, whose
//! additive groups arrive as element sets rather than as cyclic factors.

pub(crate) trait AdditiveOps {
    fn add(&self, a: usize, b: usize) -> usize;
    fn neg(&self, a: usize) -> usize;

    fn scale(&self, a: usize, n: u32) -> usize {
        let mut out = 0;
        for _ in 0..n {
            out = self.add(out, a);
        }
        out
    }
}

/// Returns `(generator, order)` pairs with `members = <g_1> (+) ... (+) <g_r>`.
///
/// `members` must be a subgroup (containing the zero index 0) of an
/// ambient index space of size `ambient`. Each step picks the first element
/// (ascending index) of maximal order modulo the span so far, then shifts it
/// by a span element so its order does not drop; the result is a direct sum.
pub(crate) fn cyclic_decomposition(
    ops: &impl AdditiveOps,
    members: &[usize],
    ambient: usize,
) -> Vec<(usize, u32)> {
    let mut sorted = members.to_vec();
    sorted.sort_unstable();
    let mut in_span = vec![false; ambient];
    in_span[0] = true;
    let mut span = vec![0usize];
    let mut basis = Vec::new();
    while span.len() < sorted.len() {
        let mut best: Option<(usize, u32)> = None;
        for &x in &sorted {
            if in_span[x] {
                continue;
            }
            let mut t = 1u32;
            let mut y = x;
            while !in_span[y] {
                y = ops.add(y, x);
                t += 1;
            }
            if best.is_none_or(|(_, m)| t > m) {
                best = Some((x, t));
            }
        }
        let (x, m) = best.expect("members is not closed under addition");
        let target = ops.scale(x, m);
        let s = span
            .iter()
            .copied()
            .filter(|&s| ops.scale(s, m) == target)
            .min()
            .expect("no order-preserving lift; members is not a subgroup");
        let y = ops.add(x, ops.neg(s));
        basis.push((y, m));
        let base_len = span.len();
        let mut shift = y;
        for _ in 1..m {
            for t in 0..base_len {
                let e = ops.add(span[t], shift);
                debug_assert!(!in_span[e]);
                in_span[e] = true;
                span.push(e);
            }
            shift = ops.add(shift, y);
        }
    }
    basis
}
