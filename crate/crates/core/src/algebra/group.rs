//! Finite groups given by explicit multiplication tables.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl GroupTable {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(name: &str, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {i} has length {}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::NotAGroup(format!("entry {bad} in row {i} out of range")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {g} has no inverse")))?;
            inverses.push(inv);
        }
        Ok(GroupTable { name: name.to_string(), table, identity, inverses })
    }

    /// The cyclic group Z/n with elements 0..n-1.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable::new(&format!("C{n}"), table).expect("cyclic table is a group")
    }

    /// The symmetric group on n letters, permutations in lexicographic order
    /// of their image lists (identity first), composed as (ab)(i) = a(b(i)).
    pub fn symmetric(n: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
        let mut current: Vec<usize> = (0..n).collect();
        while let Some(next) = next_permutation(&current) {
            perms.push(next.clone());
            current = next;
        }
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| index(&b.iter().map(|&i| a[i]).collect::<Vec<_>>())).collect())
            .collect();
        GroupTable::new(&format!("S{n}"), table).expect("permutations form a group")
    }

    /// The quaternion group with elements 1, -1, i, -i, j, -j, k, -k.
    pub fn quaternion() -> Self {
        // unit index u in {1,i,j,k} = {0,1,2,3}, sign bit s; element 2u + s
        let unit_mul = |a: usize, b: usize| -> (usize, bool) {
            match (a, b) {
                (0, x) | (x, 0) => (x, false),
                (x, y) if x == y => (0, true),
                (1, 2) => (3, false),
                (2, 3) => (1, false),
                (3, 1) => (2, false),
                (2, 1) => (3, true),
                (3, 2) => (1, true),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let table = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (u, neg) = unit_mul(a / 2, b / 2);
                        let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
                        2 * u + usize::from(sign)
                    })
                    .collect()
            })
            .collect();
        GroupTable::new("Q8", table).expect("quaternion table is a group")
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn order(&self) -> usize {
        self.table.len()
    }
    pub fn identity(&self) -> usize {
        self.identity
    }
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn power(&self, g: usize, n: usize) -> usize {
        (0..n).fold(self.identity, |acc, _| self.mul(acc, g))
    }

    /// Greedy generating set in element order.
    pub fn generators(&self) -> Vec<usize> {
        let n = self.order();
        let mut gens = Vec::new();
        let mut reached = vec![false; n];
        reached[self.identity] = true;
        for g in 0..n {
            if reached[g] {
                continue;
            }
            gens.push(g);
            let mut frontier: Vec<usize> = (0..n).filter(|&h| reached[h]).collect();
            while let Some(h) = frontier.pop() {
                for &s in &gens {
                    let next = self.mul(h, s);
                    if !reached[next] {
                        reached[next] = true;
                        frontier.push(next);
                    }
                }
            }
        }
        gens
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

fn next_permutation(p: &[usize]) -> Option<Vec<usize>> {
    let mut v = p.to_vec();
    let i = (1..v.len()).rev().find(|&i| v[i - 1] < v[i])? - 1;
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i])?;
    v.swap(i, j);
    v[i + 1..].reverse();
    Some(v)
}
