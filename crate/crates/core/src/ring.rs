//! Finite unital rings given by structure constants on cyclic additive
//! generators.
//!
//! The additive group is `Z_{m_1} x ... x Z_{m_k}` with generators
//! `g_1..g_k`; multiplication is the bilinear extension of the table
//! `g_i * g_j`. Every element also has a dense index in
//! `0..order()`, the little-endian mixed-radix value of its coefficient
//! vector (`coeffs[0]` is the least significant digit). Ascending index is
//! the canonical element order used for every "first witness" result.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard bound on the number of additive generators.
pub const MAX_RANK: usize = 32;

/// Largest admissible cyclic factor; keeps products inside `u64`.
pub const MAX_MODULUS: u32 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RingElement {
    pub coeffs: Vec<u32>,
}

impl RingElement {
    pub fn new(coeffs: Vec<u32>) -> Self {
        Self { coeffs }
    }
}

impl From<Vec<u32>> for RingElement {
    fn from(coeffs: Vec<u32>) -> Self {
        Self { coeffs }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// JSON description of a ring: `{"additive_orders":[..],"unity":[..],"mul":[[[..],..],..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub additive_orders: Vec<u32>,
    pub unity: Vec<u32>,
    pub mul: Vec<Vec<Vec<u32>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("additive_orders is empty")]
    EmptyOrders,
    #[error("additive order at position {index} is {value}; orders must lie in 1..={max}", max = MAX_MODULUS)]
    BadModulus { index: usize, value: u32 },
    #[error("{rank} additive generators exceed the supported maximum of {max}", max = MAX_RANK)]
    TooManyGenerators { rank: usize },
    #[error("ring order {order} exceeds the cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("{what}: expected {expected} entries, found {found}")]
    DimensionMismatch {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("{what}: residue {value} at position {index} is not below its modulus {modulus}")]
    ResidueOutOfRange {
        what: String,
        index: usize,
        value: u32,
        modulus: u32,
    },
    #[error("product g{i}*g{j} is not annihilated by the additive orders of g{i} and g{j}")]
    IllDefinedBilinearMap { i: usize, j: usize },
    #[error("unity fails to act as identity on generator g{generator} ({side} side)")]
    BadUnity { generator: usize, side: Side },
    #[error("(g{i}*g{j})*g{l} != g{i}*(g{j}*g{l})")]
    NonAssociative { i: usize, j: usize, l: usize },
    #[error("direct product of an empty list")]
    EmptyList,
    #[error("element set is not a unital subring")]
    NotASubring,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Clone, Debug)]
pub struct FiniteRing {
    orders: Vec<u32>,
    strides: Vec<usize>,
    size: usize,
    unity: usize,
    products: Vec<RingElement>,
    // nonzero (target generator, coefficient) pairs of g_i * g_j, row-major
    sparse: Vec<Vec<(usize, u64)>>,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.orders == other.orders && self.unity == other.unity && self.products == other.products
    }
}

impl Eq for FiniteRing {}

/// Validates a ring description against the ring axioms.
pub fn make_ring(spec: &RingSpec, max_order: usize) -> Result<FiniteRing, RingError> {
    FiniteRing::from_spec(spec, max_order)
}

impl FiniteRing {
    pub fn from_spec(spec: &RingSpec, max_order: usize) -> Result<Self, RingError> {
        let orders = &spec.additive_orders;
        if orders.is_empty() {
            return Err(RingError::EmptyOrders);
        }
        let k = orders.len();
        if k > MAX_RANK {
            return Err(RingError::TooManyGenerators { rank: k });
        }
        for (index, &value) in orders.iter().enumerate() {
            if value == 0 || value > MAX_MODULUS {
                return Err(RingError::BadModulus { index, value });
            }
        }
        let mut size: usize = 1;
        for &m in orders {
            size = size.saturating_mul(m as usize);
        }
        if size > max_order {
            return Err(RingError::OrderCapExceeded {
                order: size,
                cap: max_order,
            });
        }
        check_vector("unity", orders, &spec.unity)?;
        if spec.mul.len() != k {
            return Err(RingError::DimensionMismatch {
                what: "mul rows".into(),
                expected: k,
                found: spec.mul.len(),
            });
        }
        let mut products = Vec::with_capacity(k * k);
        for (i, row) in spec.mul.iter().enumerate() {
            if row.len() != k {
                return Err(RingError::DimensionMismatch {
                    what: format!("mul row {i}"),
                    expected: k,
                    found: row.len(),
                });
            }
            for (j, entry) in row.iter().enumerate() {
                check_vector(&format!("mul[{i}][{j}]"), orders, entry)?;
                products.push(RingElement::new(entry.clone()));
            }
        }

        let ring = Self::assemble(orders.clone(), spec.unity.clone(), products);

        // Well-definedness: m_i * (g_i g_j) = 0 and m_j * (g_i g_j) = 0.
        for i in 0..k {
            for j in 0..k {
                let p = ring.index(&ring.products[i * k + j]);
                if ring.scale_idx(p, orders[i] as i64) != 0
                    || ring.scale_idx(p, orders[j] as i64) != 0
                {
                    return Err(RingError::IllDefinedBilinearMap { i, j });
                }
            }
        }
        for g in 0..k {
            let gi = ring.generator_index(g);
            if ring.mul_idx(ring.unity, gi) != gi {
                return Err(RingError::BadUnity {
                    generator: g,
                    side: Side::Left,
                });
            }
            if ring.mul_idx(gi, ring.unity) != gi {
                return Err(RingError::BadUnity {
                    generator: g,
                    side: Side::Right,
                });
            }
        }
        for i in 0..k {
            let gi = ring.generator_index(i);
            for j in 0..k {
                let gj = ring.generator_index(j);
                let ij = ring.mul_idx(gi, gj);
                for l in 0..k {
                    let gl = ring.generator_index(l);
                    if ring.mul_idx(ij, gl) != ring.mul_idx(gi, ring.mul_idx(gj, gl)) {
                        return Err(RingError::NonAssociative { i, j, l });
                    }
                }
            }
        }
        Ok(ring)
    }

    fn assemble(orders: Vec<u32>, unity: Vec<u32>, products: Vec<RingElement>) -> Self {
        let k = orders.len();
        let mut strides = Vec::with_capacity(k);
        let mut size = 1usize;
        for &m in &orders {
            strides.push(size);
            size *= m as usize;
        }
        let sparse = products
            .iter()
            .map(|p| {
                p.coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(l, &c)| (l, c as u64))
                    .collect()
            })
            .collect();
        let unity_idx = unity
            .iter()
            .zip(&strides)
            .map(|(&c, &s)| c as usize * s)
            .sum();
        Self {
            orders,
            strides,
            size,
            unity: unity_idx,
            products,
            sparse,
        }
    }

    /// The order-1 ring, where unity equals zero.
    pub fn zero_ring() -> Self {
        Self::assemble(vec![1], vec![0], vec![RingElement::new(vec![0])])
    }

    /// `Z_n`.
    pub fn cyclic(n: u32) -> Self {
        assert!(
            (1..=MAX_MODULUS).contains(&n),
            "cyclic ring modulus out of range"
        );
        let one = if n == 1 { 0 } else { 1 };
        Self::assemble(vec![n], vec![one], vec![RingElement::new(vec![one])])
    }

    pub fn to_spec(&self) -> RingSpec {
        let k = self.rank();
        RingSpec {
            additive_orders: self.orders.clone(),
            unity: self.element(self.unity).coeffs,
            mul: (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| self.products[i * k + j].coeffs.clone())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.size
    }

    /// Number of cyclic additive generators.
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn additive_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn is_zero_ring(&self) -> bool {
        self.size == 1
    }

    pub fn zero(&self) -> RingElement {
        RingElement::new(vec![0; self.rank()])
    }

    pub fn one(&self) -> RingElement {
        self.element(self.unity)
    }

    pub fn one_idx(&self) -> usize {
        self.unity
    }

    pub fn generator(&self, i: usize) -> RingElement {
        let mut c = vec![0; self.rank()];
        c[i] = 1 % self.orders[i];
        RingElement::new(c)
    }

    pub fn generator_index(&self, i: usize) -> usize {
        if self.orders[i] == 1 {
            0
        } else {
            self.strides[i]
        }
    }

    /// `g_i * g_j`.
    pub fn structure_constant(&self, i: usize, j: usize) -> &RingElement {
        &self.products[i * self.rank() + j]
    }

    /// Checks dimension and residue ranges.
    pub fn check(&self, x: &RingElement) -> Result<(), RingError> {
        check_vector("element", &self.orders, &x.coeffs)
    }

    pub fn element(&self, idx: usize) -> RingElement {
        let mut c = vec![0; self.rank()];
        self.decode_into(idx, &mut c);
        RingElement::new(c)
    }

    pub fn index(&self, x: &RingElement) -> usize {
        debug_assert_eq!(x.coeffs.len(), self.rank());
        x.coeffs
            .iter()
            .zip(&self.strides)
            .zip(&self.orders)
            .map(|((&c, &s), &m)| (c % m) as usize * s)
            .sum()
    }

    pub fn decode_into(&self, idx: usize, out: &mut [u32]) {
        for (i, o) in out.iter_mut().enumerate() {
            *o = ((idx / self.strides[i]) % self.orders[i] as usize) as u32;
        }
    }

    fn encode(&self, digits: &[u64]) -> usize {
        digits
            .iter()
            .zip(&self.strides)
            .zip(&self.orders)
            .map(|((&c, &s), &m)| (c % m as u64) as usize * s)
            .sum()
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.size).map(|i| self.element(i))
    }

    pub fn add_idx(&self, a: usize, b: usize) -> usize {
        let mut out = 0;
        for i in 0..self.rank() {
            let m = self.orders[i] as usize;
            let s = self.strides[i];
            let d = ((a / s) % m + (b / s) % m) % m;
            out += d * s;
        }
        out
    }

    pub fn neg_idx(&self, a: usize) -> usize {
        let mut out = 0;
        for i in 0..self.rank() {
            let m = self.orders[i] as usize;
            let s = self.strides[i];
            let d = (m - (a / s) % m) % m;
            out += d * s;
        }
        out
    }

    pub fn sub_idx(&self, a: usize, b: usize) -> usize {
        self.add_idx(a, self.neg_idx(b))
    }

    /// Integer multiple `n * a`.
    pub fn scale_idx(&self, a: usize, n: i64) -> usize {
        let mut out = 0;
        for i in 0..self.rank() {
            let m = self.orders[i] as i64;
            let s = self.strides[i];
            let d = ((a / s) as i64 % m) * (n.rem_euclid(m)) % m;
            out += d as usize * s;
        }
        out
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        let k = self.rank();
        let mut x = [0u32; MAX_RANK];
        let mut y = [0u32; MAX_RANK];
        self.decode_into(a, &mut x[..k]);
        self.decode_into(b, &mut y[..k]);
        let mut acc = [0u64; MAX_RANK];
        self.mul_digits(&x[..k], &y[..k], &mut acc[..k]);
        self.encode(&acc[..k])
    }

    fn mul_digits(&self, x: &[u32], y: &[u32], acc: &mut [u64]) {
        let k = self.rank();
        for i in 0..k {
            if x[i] == 0 {
                continue;
            }
            for j in 0..k {
                if y[j] == 0 {
                    continue;
                }
                let c = x[i] as u64 * y[j] as u64;
                for &(l, v) in &self.sparse[i * k + j] {
                    let m = self.orders[l] as u64;
                    acc[l] = (acc[l] + (c % m) * v) % m;
                }
            }
        }
    }

    pub fn pow_idx(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut out = self.unity;
        while e > 0 {
            if e & 1 == 1 {
                out = self.mul_idx(out, base);
            }
            base = self.mul_idx(base, base);
            e >>= 1;
        }
        out
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> RingElement {
        self.element(self.add_idx(self.index(x), self.index(y)))
    }

    pub fn sub(&self, x: &RingElement, y: &RingElement) -> RingElement {
        self.element(self.sub_idx(self.index(x), self.index(y)))
    }

    pub fn neg(&self, x: &RingElement) -> RingElement {
        self.element(self.neg_idx(self.index(x)))
    }

    pub fn scale(&self, x: &RingElement, n: i64) -> RingElement {
        self.element(self.scale_idx(self.index(x), n))
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> RingElement {
        self.element(self.mul_idx(self.index(x), self.index(y)))
    }

    /// `x^e`, with `x^0` the unity.
    pub fn pow(&self, x: &RingElement, e: u64) -> RingElement {
        self.element(self.pow_idx(self.index(x), e))
    }

    pub fn try_mul(&self, x: &RingElement, y: &RingElement) -> Result<RingElement, RingError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.rank();
        (0..k).all(|i| (0..k).all(|j| self.products[i * k + j] == self.products[j * k + i]))
    }

    /// `n * 1`.
    pub fn integer(&self, n: i64) -> usize {
        self.scale_idx(self.unity, n)
    }

    /// Additive order of the unity.
    pub fn characteristic(&self) -> u64 {
        let mut n = 1u64;
        let mut x = self.unity;
        while x != 0 {
            x = self.add_idx(x, self.unity);
            n += 1;
        }
        n
    }

    /// Additive span of the given element indices, in canonical order.
    pub fn additive_span(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.size];
        let mut members = vec![0usize];
        seen[0] = true;
        for &g in gens {
            self.extend_span(&mut seen, &mut members, g);
        }
        members.sort_unstable();
        members
    }

    /// Adds the cyclic group generated by `g` to the subgroup `members`
    /// (unordered), keeping `seen` in sync.
    pub fn extend_span(&self, seen: &mut [bool], members: &mut Vec<usize>, g: usize) {
        if seen[g] {
            return;
        }
        let base_len = members.len();
        let mut shift = g;
        while !seen[shift] {
            for t in 0..base_len {
                let e = self.add_idx(members[t], shift);
                if !seen[e] {
                    seen[e] = true;
                    members.push(e);
                }
            }
            shift = self.add_idx(shift, g);
        }
    }

    /// The unital subring on `members` together with its embedding into
    /// `self` (embedding[i] is the index in `self` of subring element `i`).
    pub fn subring(&self, members: &[usize]) -> Result<(FiniteRing, Vec<usize>), RingError> {
        let mut inside = vec![false; self.size];
        for &m in members {
            inside[m] = true;
        }
        if !inside[0] || !inside[self.unity] {
            return Err(RingError::NotASubring);
        }
        // closure under products on a basis suffices by bilinearity
        if self.additive_span(members).len() != members.len() {
            return Err(RingError::NotASubring);
        }
        let ops = SubgroupOps { ring: self };
        let basis = crate::abelian::cyclic_decomposition(&ops, members, self.size);
        for &(a, _) in &basis {
            for &(b, _) in &basis {
                if !inside[self.mul_idx(a, b)] {
                    return Err(RingError::NotASubring);
                }
            }
        }
        Ok(build_on_basis(
            &basis,
            self.size,
            |a, b| self.add_idx(a, b),
            |a, b| self.mul_idx(a, b),
            self.unity,
        ))
    }

    /// Componentwise projection of an element of a direct product built by
    /// [`direct_product`] onto factor `factor`, given the factor ranks.
    pub fn project_factor(x: &RingElement, ranks: &[usize], factor: usize) -> RingElement {
        let start: usize = ranks[..factor].iter().sum();
        RingElement::new(x.coeffs[start..start + ranks[factor]].to_vec())
    }
}

struct SubgroupOps<'a> {
    ring: &'a FiniteRing,
}

impl crate::abelian::AdditiveOps for SubgroupOps<'_> {
    fn add(&self, a: usize, b: usize) -> usize {
        self.ring.add_idx(a, b)
    }
    fn neg(&self, a: usize) -> usize {
        self.ring.neg_idx(a)
    }
}

/// Builds a ring on a cyclic basis `(element, order)` of a finite abelian
/// group whose elements live in an ambient index space of size `ambient`.
/// Returns the ring and the map new-index -> ambient index.
pub(crate) fn build_on_basis(
    basis: &[(usize, u32)],
    ambient: usize,
    add: impl Fn(usize, usize) -> usize,
    mul: impl Fn(usize, usize) -> usize,
    unity: usize,
) -> (FiniteRing, Vec<usize>) {
    if basis.is_empty() {
        return (FiniteRing::zero_ring(), vec![0]);
    }
    let orders: Vec<u32> = basis.iter().map(|&(_, m)| m).collect();
    let size: usize = orders.iter().map(|&m| m as usize).product();
    let mut embedding = vec![0usize; size];
    let mut coords: Vec<Option<usize>> = vec![None; ambient];
    // enumerate coefficient vectors in canonical (little-endian) order
    let mut digits = vec![0u32; orders.len()];
    for (idx, slot) in embedding.iter_mut().enumerate() {
        let mut rem = idx;
        let mut acc = 0usize;
        for (d, (&(g, _), &m)) in digits.iter_mut().zip(basis.iter().zip(&orders)) {
            *d = (rem % m as usize) as u32;
            rem /= m as usize;
            for _ in 0..*d {
                acc = add(acc, g);
            }
        }
        *slot = acc;
        coords[acc] = Some(idx);
    }
    let template = FiniteRing::assemble(orders.clone(), vec![0; orders.len()], vec![]);
    let to_vec = |amb: usize| -> Vec<u32> {
        let idx = coords[amb].expect("product left the subgroup");
        template.element(idx).coeffs
    };
    let unity_vec = to_vec(unity);
    let products = basis
        .iter()
        .flat_map(|&(a, _)| basis.iter().map(move |&(b, _)| (a, b)))
        .map(|(a, b)| RingElement::new(to_vec(mul(a, b))))
        .collect();
    (FiniteRing::assemble(orders, unity_vec, products), embedding)
}

fn check_vector(what: &str, orders: &[u32], v: &[u32]) -> Result<(), RingError> {
    if v.len() != orders.len() {
        return Err(RingError::DimensionMismatch {
            what: what.into(),
            expected: orders.len(),
            found: v.len(),
        });
    }
    for (index, (&value, &modulus)) in v.iter().zip(orders).enumerate() {
        if value >= modulus {
            return Err(RingError::ResidueOutOfRange {
                what: what.into(),
                index,
                value,
                modulus,
            });
        }
    }
    Ok(())
}

/// `R_1 x ... x R_n` with concatenated generators and zero cross terms.
pub fn direct_product(rings: &[&FiniteRing], max_order: usize) -> Result<FiniteRing, RingError> {
    if rings.is_empty() {
        return Err(RingError::EmptyList);
    }
    let orders: Vec<u32> = rings
        .iter()
        .flat_map(|r| r.orders.iter().copied())
        .collect();
    let k = orders.len();
    let mut unity = Vec::with_capacity(k);
    let mut mul = vec![vec![vec![0u32; k]; k]; k];
    let mut offset = 0;
    for r in rings {
        unity.extend(r.one().coeffs);
        let rk = r.rank();
        for i in 0..rk {
            for j in 0..rk {
                let p = r.structure_constant(i, j);
                for l in 0..rk {
                    mul[offset + i][offset + j][offset + l] = p.coeffs[l];
                }
            }
        }
        offset += rk;
    }
    FiniteRing::from_spec(
        &RingSpec {
            additive_orders: orders,
            unity,
            mul,
        },
        max_order,
    )
}
