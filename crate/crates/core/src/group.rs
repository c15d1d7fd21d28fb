//! Finite groups as validated Cayley tables.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Subgroups are bitmasks, so groups are limited to 64 elements.
pub const GROUP_ORDER_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Named {
        name: String,
    },
    Table {
        cayley: Vec<Vec<usize>>,
        identity: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(GroupAxiom),
    #[error("group order {order} exceeds the cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("unknown group name {0:?}; expected C<n> or C<m> x C<n>")]
    UnknownName(String),
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal: {g} * H * {g}^-1 != H")]
    NotNormal { g: usize },
    #[error("group element index {0} out of range")]
    UnknownElement(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupAxiom {
    EmptyTable,
    NotSquare { row: usize },
    EntryOutOfRange { row: usize, col: usize },
    NotLatinRow { row: usize },
    NotLatinColumn { col: usize },
    BadIdentity { identity: usize },
    NonAssociative { a: usize, b: usize, c: usize },
    BadLabels,
}

impl fmt::Display for GroupAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupAxiom::EmptyTable => write!(f, "empty Cayley table"),
            GroupAxiom::NotSquare { row } => write!(f, "row {row} has the wrong length"),
            GroupAxiom::EntryOutOfRange { row, col } => {
                write!(f, "entry ({row},{col}) is out of range")
            }
            GroupAxiom::NotLatinRow { row } => {
                write!(f, "row {row} is not a permutation (not a Latin square)")
            }
            GroupAxiom::NotLatinColumn { col } => {
                write!(f, "column {col} is not a permutation (not a Latin square)")
            }
            GroupAxiom::BadIdentity { identity } => {
                write!(f, "element {identity} is not a two-sided identity")
            }
            GroupAxiom::NonAssociative { a, b, c } => {
                write!(f, "({a}*{b})*{c} != {a}*({b}*{c})")
            }
            GroupAxiom::BadLabels => write!(f, "label count does not match the order"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Vec<String>,
}

/// A subgroup as a bitmask over element indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    mask: u64,
}

impl Subgroup {
    pub fn from_mask(mask: u64) -> Self {
        Self { mask }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, g: usize) -> bool {
        g < 64 && self.mask >> g & 1 == 1
    }

    pub fn order(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn elements(&self) -> Vec<usize> {
        (0..64).filter(|&g| self.contains(g)).collect()
    }
}

/// `G/H` together with the projection `G -> G/H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGroup {
    pub group: FiniteGroup,
    pub projection: Vec<usize>,
    pub cosets: Vec<Vec<usize>>,
}

/// Validates a named or tabulated group description.
pub fn make_group(spec: &GroupSpec, max_order: usize) -> Result<FiniteGroup, GroupError> {
    let cap = max_order.min(GROUP_ORDER_LIMIT);
    let group = match spec {
        GroupSpec::Named { name } => parse_named(name, cap)?,
        GroupSpec::Table {
            cayley,
            identity,
            labels,
        } => {
            if cayley.len() > cap {
                return Err(GroupError::OrderCapExceeded {
                    order: cayley.len(),
                    cap,
                });
            }
            FiniteGroup::from_table(cayley, *identity, labels.clone())?
        }
    };
    Ok(group)
}

fn parse_named(name: &str, cap: usize) -> Result<FiniteGroup, GroupError> {
    let unknown = || GroupError::UnknownName(name.to_string());
    let factor = |s: &str| -> Result<usize, GroupError> {
        let s = s.trim();
        let digits = s
            .strip_prefix("C_")
            .or_else(|| s.strip_prefix('C'))
            .ok_or_else(unknown)?;
        digits
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(unknown)
    };
    let parts: Vec<&str> = name.split(['x', '×']).collect();
    let group = match parts.as_slice() {
        [one] => {
            let n = factor(one)?;
            check_cap(n, cap)?;
            FiniteGroup::cyclic(n)
        }
        [a, b] => {
            let (m, n) = (factor(a)?, factor(b)?);
            check_cap(m.saturating_mul(n), cap)?;
            FiniteGroup::cyclic_product(m, n)
        }
        _ => return Err(unknown()),
    };
    Ok(group)
}

fn check_cap(order: usize, cap: usize) -> Result<(), GroupError> {
    if order > cap {
        Err(GroupError::OrderCapExceeded { order, cap })
    } else {
        Ok(())
    }
}

impl FiniteGroup {
    pub fn from_table(
        cayley: &[Vec<usize>],
        identity: usize,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let n = cayley.len();
        let bad = |a| Err(GroupError::NotAGroup(a));
        if n == 0 {
            return bad(GroupAxiom::EmptyTable);
        }
        if n > GROUP_ORDER_LIMIT {
            return Err(GroupError::OrderCapExceeded {
                order: n,
                cap: GROUP_ORDER_LIMIT,
            });
        }
        for (row, r) in cayley.iter().enumerate() {
            if r.len() != n {
                return bad(GroupAxiom::NotSquare { row });
            }
            for (col, &v) in r.iter().enumerate() {
                if v >= n {
                    return bad(GroupAxiom::EntryOutOfRange { row, col });
                }
            }
        }
        for (row, r) in cayley.iter().enumerate() {
            if r.iter().collect::<HashSet<_>>().len() != n {
                return bad(GroupAxiom::NotLatinRow { row });
            }
        }
        for col in 0..n {
            if (0..n).map(|r| cayley[r][col]).collect::<HashSet<_>>().len() != n {
                return bad(GroupAxiom::NotLatinColumn { col });
            }
        }
        if identity >= n || (0..n).any(|a| cayley[identity][a] != a || cayley[a][identity] != a) {
            return bad(GroupAxiom::BadIdentity { identity });
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                        return bad(GroupAxiom::NonAssociative { a, b, c });
                    }
                }
            }
        }
        let labels = match labels {
            Some(l) if l.len() != n => return bad(GroupAxiom::BadLabels),
            Some(l) => l,
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        let table: Vec<usize> = cayley.iter().flatten().copied().collect();
        let inverses = (0..n)
            .map(|a| (0..n).find(|&b| table[a * n + b] == identity).unwrap())
            .collect();
        Ok(Self {
            order: n,
            table,
            identity,
            inverses,
            labels,
        })
    }

    /// `C_n` as `{e, g, g^2, ...}` with `g^i` at index `i`.
    pub fn cyclic(n: usize) -> Self {
        assert!((1..=GROUP_ORDER_LIMIT).contains(&n));
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a + b) % n))
            .collect();
        let inverses = (0..n).map(|a| (n - a) % n).collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        Self {
            order: n,
            table,
            identity: 0,
            inverses,
            labels,
        }
    }

    /// `C_m x C_n` with `(i, j)` at index `i * n + j`.
    pub fn cyclic_product(m: usize, n: usize) -> Self {
        let order = m * n;
        assert!((1..=GROUP_ORDER_LIMIT).contains(&order));
        let split = |x: usize| (x / n, x % n);
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let ((i1, j1), (i2, j2)) = (split(a), split(b));
                table.push(((i1 + i2) % m) * n + (j1 + j2) % n);
            }
        }
        let inverses = (0..order)
            .map(|a| {
                let (i, j) = split(a);
                ((m - i) % m) * n + (n - j) % n
            })
            .collect();
        let labels = (0..order)
            .map(|a| {
                let (i, j) = split(a);
                format!("({i},{j})")
            })
            .collect();
        Self {
            order,
            table,
            identity: 0,
            inverses,
            labels,
        }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn to_spec(&self) -> GroupSpec {
        let n = self.order;
        GroupSpec::Table {
            cayley: (0..n)
                .map(|a| self.table[a * n..(a + 1) * n].to_vec())
                .collect(),
            identity: self.identity,
            labels: Some(self.labels.clone()),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn check_element(&self, a: usize) -> Result<(), GroupError> {
        if a < self.order {
            Ok(())
        } else {
            Err(GroupError::UnknownElement(a))
        }
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity {
            x = self.op(x, a);
            n += 1;
        }
        n
    }

    /// True iff the order is `p^k` for some `k >= 0`.
    pub fn is_p_group(&self, p: u64) -> bool {
        if p < 2 {
            return false;
        }
        let mut n = self.order as u64;
        while n.is_multiple_of(p) {
            n /= p;
        }
        n == 1
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_mask(if self.order == 64 {
            u64::MAX
        } else {
            (1u64 << self.order) - 1
        })
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_mask(1 << self.identity)
    }

    /// Closure of `seed` under the group operation.
    pub fn generated(&self, seed: u64) -> Subgroup {
        let mut mask = seed | 1 << self.identity;
        loop {
            let mut next = mask;
            for a in 0..self.order {
                if mask >> a & 1 == 0 {
                    continue;
                }
                for b in 0..self.order {
                    if mask >> b & 1 == 1 {
                        next |= 1 << self.op(a, b);
                    }
                }
            }
            if next == mask {
                return Subgroup::from_mask(mask);
            }
            mask = next;
        }
    }

    pub fn subgroup_from_elements(&self, elements: &[usize]) -> Result<Subgroup, GroupError> {
        let mut mask = 0u64;
        for &g in elements {
            self.check_element(g)?;
            mask |= 1 << g;
        }
        if self.generated(mask).mask() != mask {
            return Err(GroupError::NotASubgroup);
        }
        Ok(Subgroup::from_mask(mask))
    }

    /// Every subgroup, ordered by (order, mask).
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let cyclic: BTreeSet<u64> = (0..self.order)
            .map(|a| self.generated(1 << a).mask())
            .collect();
        let mut all: BTreeSet<u64> = BTreeSet::new();
        all.insert(self.trivial_subgroup().mask());
        for &c in &cyclic {
            let current: Vec<u64> = all.iter().copied().collect();
            for s in current {
                if s & c != c {
                    all.insert(self.generated(s | c).mask());
                }
            }
        }
        let mut subgroups: Vec<Subgroup> = all.into_iter().map(Subgroup::from_mask).collect();
        subgroups.sort_by_key(|s| (s.order(), s.mask()));
        subgroups
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.conjugation_witness(h).is_none()
    }

    fn conjugation_witness(&self, h: &Subgroup) -> Option<usize> {
        (0..self.order).find(|&g| {
            h.elements()
                .iter()
                .any(|&x| !h.contains(self.op(self.op(g, x), self.inverse(g))))
        })
    }

    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        self.subgroups()
            .into_iter()
            .filter(|h| self.is_normal(h))
            .collect()
    }

    /// Cosets are ordered by their smallest element index.
    pub fn quotient(&self, h: &Subgroup) -> Result<QuotientGroup, GroupError> {
        if self.generated(h.mask()).mask() != h.mask() || !h.contains(self.identity) {
            return Err(GroupError::NotASubgroup);
        }
        if let Some(g) = self.conjugation_witness(h) {
            return Err(GroupError::NotNormal { g });
        }
        let mut projection = vec![usize::MAX; self.order];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for g in 0..self.order {
            if projection[g] != usize::MAX {
                continue;
            }
            let mut coset: Vec<usize> = h.elements().iter().map(|&x| self.op(g, x)).collect();
            coset.sort_unstable();
            for &x in &coset {
                projection[x] = cosets.len();
            }
            cosets.push(coset);
        }
        let q = cosets.len();
        let cayley: Vec<Vec<usize>> = (0..q)
            .map(|a| {
                (0..q)
                    .map(|b| projection[self.op(cosets[a][0], cosets[b][0])])
                    .collect()
            })
            .collect();
        let labels = cosets
            .iter()
            .map(|c| {
                let names: Vec<&str> = c.iter().map(|&x| self.label(x)).collect();
                format!("[{}]", names.join(","))
            })
            .collect();
        let group = FiniteGroup::from_table(&cayley, projection[self.identity], Some(labels))?;
        Ok(QuotientGroup {
            group,
            projection,
            cosets,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        // permutations of {0,1,2} in lexicographic order; composition (p*q)(x) = p(q(x))
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let cayley = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| idx([p[q[0]], p[q[1]], p[q[2]]]))
                    .collect()
            })
            .collect::<Vec<Vec<usize>>>();
        FiniteGroup::from_table(&cayley, 0, None).unwrap()
    }

    #[test]
    fn named_c2() {
        let g = make_group(&GroupSpec::Named { name: "C2".into() }, 64).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.op(1, 1), g.identity());
        assert_eq!(g.label(1), "g");
        let same = make_group(&GroupSpec::Named { name: "C_2".into() }, 64).unwrap();
        assert_eq!(g, same);
        let k4 = make_group(
            &GroupSpec::Named {
                name: "C2 x C2".into(),
            },
            64,
        )
        .unwrap();
        assert_eq!(k4.order(), 4);
        assert!(k4.is_abelian());
    }

    #[test]
    fn table_c2_and_rejections() {
        let g = make_group(
            &GroupSpec::Table {
                cayley: vec![vec![0, 1], vec![1, 0]],
                identity: 0,
                labels: None,
            },
            64,
        )
        .unwrap();
        assert_eq!(g.op(1, 1), 0);
        let err = make_group(
            &GroupSpec::Table {
                cayley: vec![vec![0, 1], vec![0, 1]],
                identity: 0,
                labels: None,
            },
            64,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            GroupError::NotAGroup(GroupAxiom::NotLatinColumn { .. })
        ));
        assert!(matches!(
            make_group(&GroupSpec::Named { name: "D4".into() }, 64),
            Err(GroupError::UnknownName(_))
        ));
        assert!(matches!(
            make_group(&GroupSpec::Named { name: "C65".into() }, 64),
            Err(GroupError::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn p_groups() {
        assert!(FiniteGroup::cyclic(8).is_p_group(2));
        assert!(!FiniteGroup::cyclic(6).is_p_group(2));
        assert!(FiniteGroup::trivial().is_p_group(3));
        assert!(FiniteGroup::cyclic_product(3, 3).is_p_group(3));
    }

    #[test]
    fn quotients() {
        let c2 = FiniteGroup::cyclic(2);
        let q = c2.quotient(&c2.whole()).unwrap();
        assert_eq!(q.group.order(), 1);
        let q = c2.quotient(&c2.trivial_subgroup()).unwrap();
        assert_eq!(q.group.order(), 2);
        assert_eq!(q.projection, vec![0, 1]);

        // C4 / {e, g^2}: coset table oracle
        let c4 = FiniteGroup::cyclic(4);
        let h = c4.subgroup_from_elements(&[0, 2]).unwrap();
        let q = c4.quotient(&h).unwrap();
        assert_eq!(q.cosets, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(q.projection, vec![0, 1, 0, 1]);
        assert_eq!(q.group.op(1, 1), 0);
        assert_eq!(q.group.order(), 2);
    }

    #[test]
    fn nonnormal_and_nonsubgroup() {
        let g = s3();
        assert!(!g.is_abelian());
        let h = g.subgroup_from_elements(&[0, 1]).unwrap();
        assert!(matches!(g.quotient(&h), Err(GroupError::NotNormal { .. })));
        assert_eq!(
            g.subgroup_from_elements(&[0, 1, 2]).unwrap_err(),
            GroupError::NotASubgroup
        );
        // S3: 6 subgroups, 3 of them normal
        assert_eq!(g.subgroups().len(), 6);
        assert_eq!(g.normal_subgroups().len(), 3);
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(FiniteGroup::cyclic(12).subgroups().len(), 6);
        assert_eq!(FiniteGroup::cyclic_product(2, 2).subgroups().len(), 5);
    }
}
