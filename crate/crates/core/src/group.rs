//! Finite groups as Cayley tables with the identity at index 0.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    // table[a * order + b] = a·b
    table: Vec<usize>,
    generators: Vec<usize>,
    inverse: Vec<usize>,
    // "cyclic:m" / "symmetric:3" when built from a token
    name: Option<String>,
}

impl FiniteGroup {
    /// Validates a Cayley table: closure, identity at 0, Latin rows and
    /// columns, associativity, and that `generators` generate.
    pub fn from_table(table: Vec<Vec<usize>>, generators: Vec<usize>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut flat = Vec::with_capacity(order * order);
        for row in &table {
            if row.len() != order {
                return Err(Error::InvalidGroup("table is not square".into()));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= order) {
                return Err(Error::InvalidGroup(format!("entry {x} out of range")));
            }
            flat.extend_from_slice(row);
        }
        let at = |a: usize, b: usize| flat[a * order + b];
        for a in 0..order {
            if at(0, a) != a || at(a, 0) != a {
                return Err(Error::InvalidGroup("index 0 is not the identity".into()));
            }
        }
        for a in 0..order {
            let mut row_seen = vec![false; order];
            let mut col_seen = vec![false; order];
            for b in 0..order {
                row_seen[at(a, b)] = true;
                col_seen[at(b, a)] = true;
            }
            if row_seen.contains(&false) || col_seen.contains(&false) {
                return Err(Error::InvalidGroup(format!(
                    "row or column {a} is not a permutation"
                )));
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        if let Some(&g) = generators.iter().find(|&&g| g >= order) {
            return Err(Error::InvalidGroup(format!("generator {g} out of range")));
        }
        let inverse = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| at(a, b) == 0)
                    .expect("Latin row has 0")
            })
            .collect();
        let g = FiniteGroup {
            order,
            table: flat,
            generators,
            inverse,
            name: None,
        };
        if g.closure(&g.generators).len() != order {
            return Err(Error::InvalidGroup("generators do not generate".into()));
        }
        Ok(g)
    }

    /// `Z/m` written additively, generated by 1.
    pub fn cyclic(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        let table = (0..m)
            .map(|a| (0..m).map(|b| (a + b) % m).collect())
            .collect();
        let gens = if m > 1 { vec![1] } else { vec![] };
        let mut g = FiniteGroup::from_table(table, gens)?;
        g.name = Some(format!("cyclic:{m}"));
        Ok(g)
    }

    /// The symmetric group on three letters, permutations listed
    /// lexicographically (so the identity comes first).
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        // (σ·τ)(x) = σ(τ(x))
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index([s[t[0]], s[t[1]], s[t[2]]]))
                    .collect()
            })
            .collect();
        let mut g = FiniteGroup::from_table(table, vec![2, 3]).expect("S_3 table is valid");
        g.name = Some("symmetric:3".into());
        g
    }

    /// Parses `cyclic:m` or `symmetric:3`.
    pub fn parse(token: &str) -> Result<Self> {
        let (kind, arg) = token
            .split_once(':')
            .ok_or_else(|| Error::InvalidGroup(format!("unrecognised group `{token}`")))?;
        let m: usize = arg
            .trim()
            .parse()
            .map_err(|_| Error::InvalidGroup(format!("bad order in `{token}`")))?;
        match kind.trim() {
            "cyclic" => FiniteGroup::cyclic(m),
            "symmetric" if m == 3 => Ok(FiniteGroup::symmetric3()),
            _ => Err(Error::InvalidGroup(format!("unrecognised group `{token}`"))),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// Elements of the subgroup generated by `gens`, in discovery order
    /// starting from the identity.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut out = vec![0];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(s, x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(a, x);
            k += 1;
        }
        k
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        is_power_of(self.order, p)
    }

    /// Cyclic of prime order `p`.
    pub fn is_cyclic_of_prime_order(&self, p: u64) -> bool {
        self.order as u64 == p && (0..self.order).any(|a| self.element_order(a) == self.order)
    }

    /// A Sylow `p`-subgroup as a sorted list of elements (identity first),
    /// with the elements used to generate it.
    pub fn sylow(&self, p: u64) -> (Vec<usize>, Vec<usize>) {
        let mut target = 1usize;
        while self.order.is_multiple_of(target * p as usize) {
            target *= p as usize;
        }
        let p_elements: Vec<usize> = (1..self.order)
            .filter(|&a| is_power_of(self.element_order(a), p))
            .collect();
        let mut gens: Vec<usize> = Vec::new();
        let mut elems = vec![0];
        // Growing a p-subgroup one element at a time always succeeds: inside
        // a Sylow subgroup containing it, its normaliser is strictly larger.
        while elems.len() < target {
            let next = p_elements.iter().find_map(|&a| {
                if elems.contains(&a) {
                    return None;
                }
                let mut trial = gens.clone();
                trial.push(a);
                let h = self.closure(&trial);
                is_power_of(h.len(), p).then_some((trial, h))
            });
            let (g, h) = next.expect("a p-subgroup below Sylow order can be enlarged");
            gens = g;
            elems = h;
        }
        elems.sort_unstable();
        (elems, gens)
    }

    /// The subgroup on `elements` (which must contain 0 and be closed),
    /// re-indexed in the given order, with `generators` given as elements
    /// of `self`.
    pub fn subgroup(&self, elements: &[usize], generators: &[usize]) -> Result<Self> {
        let pos = |x: usize| {
            elements
                .iter()
                .position(|&e| e == x)
                .ok_or_else(|| Error::InvalidGroup("subset is not closed".into()))
        };
        if elements.first() != Some(&0) {
            return Err(Error::InvalidGroup(
                "subgroup must list the identity first".into(),
            ));
        }
        let mut table = Vec::with_capacity(elements.len());
        for &a in elements {
            let row = elements
                .iter()
                .map(|&b| pos(self.mul(a, b)))
                .collect::<Result<Vec<_>>>()?;
            table.push(row);
        }
        let gens = generators
            .iter()
            .map(|&g| pos(g))
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::from_table(table, gens)
    }

    /// Short label: the token when there is one.
    pub fn describe(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => format!("table group of order {}", self.order),
        }
    }
}

fn is_power_of(mut x: usize, p: u64) -> bool {
    let p = p as usize;
    while x > 1 {
        if !x.is_multiple_of(p) {
            return false;
        }
        x /= p;
    }
    x == 1
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({})", self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_symmetric() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(c3.mul(2, 2), 1);
        assert_eq!(c3.inv(1), 2);
        assert!(c3.is_cyclic_of_prime_order(3));
        let s3 = FiniteGroup::symmetric3();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_p_group(2));
        assert_ne!(s3.mul(2, 3), s3.mul(3, 2));
        assert!(!s3.is_cyclic_of_prime_order(3));
        assert_eq!(FiniteGroup::parse("cyclic:5").unwrap().order(), 5);
        assert!(FiniteGroup::parse("dihedral:4").is_err());
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]], vec![1]).is_err());
        assert!(FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]], vec![1]).is_err());
        // valid table, but no generators for a nontrivial group
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]], vec![]).is_err());
    }

    #[test]
    fn sylow_subgroups_of_s3() {
        let s3 = FiniteGroup::symmetric3();
        let (p2, g2) = s3.sylow(2);
        assert_eq!(p2.len(), 2);
        let (p3, g3) = s3.sylow(3);
        assert_eq!(p3.len(), 3);
        let h = s3.subgroup(&p3, &g3).unwrap();
        assert!(h.is_cyclic_of_prime_order(3));
        assert!(s3.subgroup(&p2, &g2).unwrap().is_p_group(2));
        let (p5, _) = s3.sylow(5);
        assert_eq!(p5, vec![0]);
    }
}
