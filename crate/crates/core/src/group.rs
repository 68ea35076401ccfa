//! Finite groups given by multiplication tables.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    n: usize,
    /// `table[a·n + b] = a·b`.
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    names: Vec<String>,
    /// For permutation groups, the permutation of each element
    /// (`perm[x] = image of x`, points `0..degree`).
    perms: Option<Vec<Vec<usize>>>,
}

impl Group {
    pub fn from_table(rows: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGroupTable("empty table".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidGroupTable("table is not square".into()));
        }
        if rows.iter().flatten().any(|&x| x >= n) {
            return Err(Error::InvalidGroupTable("entry out of range".into()));
        }
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        let m = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| Error::InvalidGroupTable("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| m(a, b) == identity && m(b, a) == identity)
                .ok_or_else(|| Error::InvalidGroupTable(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::InvalidGroupTable(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let names = match names {
            Some(v) if v.len() == n => v,
            Some(_) => return Err(Error::InvalidGroupTable("wrong number of element names".into())),
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        Ok(Group { n, table, identity, inverse, names, perms: None })
    }

    /// The group generated by permutations of `0..degree`, elements sorted
    /// lexicographically (so the identity comes first).
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        for g in generators {
            if !is_permutation(g, degree) {
                return Err(Error::InvalidInput(format!("{g:?} is not a permutation of {degree} points")));
            }
        }
        let mut elems: BTreeSet<Vec<usize>> = BTreeSet::new();
        let id: Vec<usize> = (0..degree).collect();
        elems.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in generators {
                let y = compose(g, &x);
                if elems.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        let list: Vec<Vec<usize>> = elems.into_iter().collect();
        let index = |p: &Vec<usize>| list.binary_search(p).expect("closed under composition");
        let rows = list.iter().map(|a| list.iter().map(|b| index(&compose(a, b))).collect()).collect();
        let names = list.iter().map(|p| cycle_notation(p)).collect();
        let mut g = Group::from_table(rows, Some(names))?;
        g.perms = Some(list);
        Ok(g)
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroupTable("cyclic group of order 0".into()));
        }
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            })
            .collect();
        Group::from_table(rows, Some(names))
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if n >= 2 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            gens.push(t);
            gens.push((0..n).map(|i| (i + 1) % n).collect());
        }
        Group::from_permutations(n, &gens)
    }

    /// The dihedral group of order `2n` acting on the vertices of an `n`-gon.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInput("dihedral groups need n ≥ 3".into()));
        }
        let r = (0..n).map(|i| (i + 1) % n).collect();
        let s = (0..n).map(|i| (n - i) % n).collect();
        Group::from_permutations(n, &[r, s])
    }

    /// `Z_2 × Z_2` with elements `e, a, b, c = ab` in that order.
    pub fn klein() -> Result<Self> {
        let rows = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        Group::from_table(rows, Some(["e", "a", "b", "c"].iter().map(|s| s.to_string()).collect()))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn permutations(&self) -> Option<&[Vec<usize>]> {
        self.perms.as_deref()
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.n).map(|a| self.element_order(a)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The subgroup generated by `gens`, as a sorted element list.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = BTreeSet::from([self.identity]);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        set.contains(&self.identity) && set.iter().all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, self.inv(b)))))
    }

    /// Finds an element by name, or by cycle notation in a permutation group.
    pub fn find(&self, s: &str) -> Option<usize> {
        let s = s.trim();
        if let Some(i) = self.names.iter().position(|n| n == s) {
            return Some(i);
        }
        let perms = self.perms.as_ref()?;
        let p = parse_cycles(s, perms[0].len()).ok()?;
        perms.iter().position(|q| *q == p)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

pub fn is_permutation(p: &[usize], degree: usize) -> bool {
    let mut seen = vec![false; degree];
    p.len() == degree && p.iter().all(|&x| x < degree && !std::mem::replace(&mut seen[x], true))
}

/// `(a∘b)(x) = a(b(x))`.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

pub fn invert_permutation(a: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

/// Cycle notation with points numbered from 1, e.g. `(12)(34)`; `()` for
/// the identity. Points above 9 are separated by spaces.
pub fn cycle_notation(p: &[usize]) -> String {
    let sep = if p.len() > 9 { " " } else { "" };
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push((x + 1).to_string());
            x = p[x];
        }
        out.push('(');
        out.push_str(&cyc.join(sep));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Parses cycle notation (points from 1) into a permutation of `degree` points.
pub fn parse_cycles(s: &str, degree: usize) -> Result<Vec<usize>> {
    let mut p: Vec<usize> = (0..degree).collect();
    let s = s.trim();
    let mut rest = s;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    while !rest.is_empty() {
        let body_end = rest.find(')').ok_or_else(|| Error::Parse(format!("unbalanced cycle in {s:?}")))?;
        let body = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("cycle must start with '(' in {s:?}")))?;
        let body = &body[..body_end - 1];
        let pts: Vec<usize> = if body.contains([' ', ',']) {
            body.split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad point {t:?}"))))
                .collect::<Result<_>>()?
        } else {
            body.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad point {c:?}"))))
                .collect::<Result<_>>()?
        };
        if pts.iter().any(|&x| x == 0 || x > degree) {
            return Err(Error::Parse(format!("point out of range 1..={degree} in {s:?}")));
        }
        cycles.push(pts.into_iter().map(|x| x - 1).collect());
        rest = rest[body_end + 1..].trim_start();
    }
    // Cycles compose right to left.
    for cyc in cycles.iter().rev() {
        let mut c: Vec<usize> = (0..degree).collect();
        for k in 0..cyc.len() {
            c[cyc[k]] = cyc[(k + 1) % cyc.len()];
        }
        p = compose(&c, &p);
    }
    if !is_permutation(&p, degree) {
        return Err(Error::Parse(format!("repeated point in {s:?}")));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_have_expected_orders() {
        assert_eq!(Group::symmetric(3).unwrap().order(), 6);
        assert_eq!(Group::dihedral(4).unwrap().order(), 8);
        assert!(Group::klein().unwrap().is_abelian());
        assert_eq!(Group::cyclic(6).unwrap().exponent(), 6);
        assert!(!Group::symmetric(3).unwrap().is_abelian());
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = parse_cycles("(12)(34)", 4).unwrap();
        assert_eq!(p, vec![1, 0, 3, 2]);
        assert_eq!(cycle_notation(&p), "(12)(34)");
        assert_eq!(cycle_notation(&parse_cycles("(1 2 3)", 3).unwrap()), "(123)");
        let s3 = Group::symmetric(3).unwrap();
        let t = s3.find("(12)").unwrap();
        assert_eq!(s3.element_order(t), 2);
        assert_eq!(s3.identity(), 0);
    }

    #[test]
    fn rejects_non_group_tables() {
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(Group::from_table(bad, None), Err(Error::InvalidGroupTable(_))));
    }
}
