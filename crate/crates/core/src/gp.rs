//! Hopf-Galois structures on a separable extension with Galois group `G`
//! and subfield group `G′`: regular subgroups `N ⊆ S(G/G′)` normalized by
//! the image of `G`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::group::{compose, cycle_notation, invert_permutation, Group};

pub const MAX_DEGREE: usize = 7;

/// `G` acting on the left cosets of `G′`, the coset `G′` itself first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetAction {
    pub cosets: Vec<Vec<usize>>,
    /// `images[g]` is the permutation `xG′ ↦ gxG′`.
    pub images: Vec<Vec<usize>>,
    /// The kernel of the action.
    pub core: Vec<usize>,
}

impl CosetAction {
    pub fn degree(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_faithful(&self) -> bool {
        self.core.len() == 1
    }
}

pub fn coset_action(g: &Group, sub: &[usize]) -> Result<CosetAction> {
    let sub: BTreeSet<usize> = sub.iter().copied().collect();
    let list: Vec<usize> = sub.iter().copied().collect();
    if list.iter().any(|&x| x >= g.order()) || !g.is_subgroup(&list) {
        return Err(Error::NotASubgroup(format!("{list:?}")));
    }
    let mut cosets: Vec<Vec<usize>> = vec![list.clone()];
    let mut owner = vec![usize::MAX; g.order()];
    for &s in &list {
        owner[s] = 0;
    }
    for x in 0..g.order() {
        if owner[x] == usize::MAX {
            let c: Vec<usize> = list.iter().map(|&s| g.mul(x, s)).collect();
            for &y in &c {
                owner[y] = cosets.len();
            }
            cosets.push(c);
        }
    }
    let images: Vec<Vec<usize>> = (0..g.order()).map(|a| cosets.iter().map(|c| owner[g.mul(a, c[0])]).collect()).collect();
    let id: Vec<usize> = (0..cosets.len()).collect();
    let core = (0..g.order()).filter(|&a| images[a] == id).collect();
    Ok(CosetAction { cosets, images, core })
}

fn fixed_point_free(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i != x)
}

/// Fixed-point-free permutations of `0..m` sending 0 to `x`.
fn candidates(m: usize, x: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, p: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let i = p.len();
        if i == m {
            out.push(p.clone());
            return;
        }
        for v in 0..m {
            if !used[v] && v != i {
                used[v] = true;
                p.push(v);
                go(m, p, used, out);
                p.pop();
                used[v] = false;
            }
        }
    }
    let mut used = vec![false; m];
    used[x] = true;
    let mut out = Vec::new();
    go(m, &mut vec![x], &mut used, &mut out);
    out
}

/// Fill in every product of assigned elements; `false` on a clash.
fn close(slots: &mut [Option<Vec<usize>>]) -> bool {
    loop {
        let assigned: Vec<Vec<usize>> = slots.iter().flatten().cloned().collect();
        let mut changed = false;
        for a in &assigned {
            for b in &assigned {
                let c = compose(a, b);
                let y = c[0];
                match &slots[y] {
                    Some(s) if *s != c => return false,
                    Some(_) => {}
                    None => {
                        if !fixed_point_free(&c) {
                            return false;
                        }
                        slots[y] = Some(c);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

/// All regular subgroups of `S_m`, each listed by the element sending 0 to `x`.
pub fn regular_subgroups(m: usize) -> Result<Vec<Vec<Vec<usize>>>> {
    if m > MAX_DEGREE {
        return Err(Error::DegreeTooLarge(m));
    }
    let mut slots = vec![None; m];
    slots[0] = Some((0..m).collect());
    let mut out = Vec::new();
    let mut cache: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    fn search(slots: Vec<Option<Vec<usize>>>, cache: &mut BTreeMap<usize, Vec<Vec<usize>>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let m = slots.len();
        let Some(x) = slots.iter().position(Option::is_none) else {
            out.push(slots.into_iter().flatten().collect());
            return;
        };
        let cands = cache.entry(x).or_insert_with(|| candidates(m, x)).clone();
        for p in cands {
            let mut next = slots.clone();
            next[x] = Some(p);
            if close(&mut next) {
                search(next, cache, out);
            }
        }
    }
    search(slots, &mut cache, &mut out);
    let unique: BTreeSet<Vec<Vec<usize>>> = out.into_iter().collect();
    Ok(unique.into_iter().collect())
}

/// Order, exponent and commutativity of a permutation group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub exponent: usize,
    pub abelian: bool,
}

impl std::fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = if self.exponent == self.order {
            "cyclic"
        } else if self.abelian {
            "abelian"
        } else {
            "nonabelian"
        };
        write!(f, "order {} exponent {} {kind}", self.order, self.exponent)
    }
}

pub fn fingerprint(elems: &[Vec<usize>]) -> Fingerprint {
    let m = elems.first().map_or(0, |p| p.len());
    let id: Vec<usize> = (0..m).collect();
    let order_of = |p: &Vec<usize>| {
        let mut k = 1;
        let mut q = p.clone();
        while q != id {
            q = compose(p, &q);
            k += 1;
        }
        k
    };
    let gcd = |mut a: usize, mut b: usize| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let exponent = elems.iter().map(order_of).fold(1, |acc, k| acc / gcd(acc, k) * k);
    let abelian = elems.iter().all(|a| elems.iter().all(|b| compose(a, b) == compose(b, a)));
    Fingerprint { order: elems.len(), exponent, abelian }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfGaloisStructures {
    pub action: CosetAction,
    /// Each subgroup sorted lexicographically.
    pub structures: Vec<Vec<Vec<usize>>>,
    pub types: BTreeMap<Fingerprint, usize>,
}

impl HopfGaloisStructures {
    pub fn is_hopf_galois(&self) -> bool {
        !self.structures.is_empty()
    }
}

/// `N` is regular and stable under conjugation by every `λ(g)`.
pub fn is_valid_structure(action: &CosetAction, n: &[Vec<usize>]) -> bool {
    let m = action.degree();
    let set: BTreeSet<&Vec<usize>> = n.iter().collect();
    let orbit: BTreeSet<usize> = n.iter().map(|p| p[0]).collect();
    let regular = n.len() == m
        && orbit.len() == m
        && n.iter().all(|p| p.iter().enumerate().all(|(i, &x)| i != x) || p.iter().enumerate().all(|(i, &x)| i == x))
        && n.iter().all(|a| n.iter().all(|b| set.contains(&compose(a, b))));
    regular
        && action.images.iter().all(|g| {
            let gi = invert_permutation(g);
            n.iter().all(|p| set.contains(&compose(g, &compose(p, &gi))))
        })
}

pub fn hopf_galois_structures(g: &Group, sub: &[usize]) -> Result<HopfGaloisStructures> {
    let action = coset_action(g, sub)?;
    let m = action.degree();
    if m > MAX_DEGREE {
        return Err(Error::DegreeTooLarge(m));
    }
    if !action.is_faithful() {
        let names: Vec<&str> = action.core.iter().map(|&a| g.name(a)).collect();
        return Err(Error::Unsupported(format!("the coset action has nontrivial kernel {{{}}}", names.join(", "))));
    }
    let mut structures = Vec::new();
    for mut n in regular_subgroups(m)? {
        if is_valid_structure(&action, &n) {
            n.sort();
            structures.push(n);
        }
    }
    structures.sort();
    let mut types = BTreeMap::new();
    for n in &structures {
        *types.entry(fingerprint(n)).or_insert(0) += 1;
    }
    Ok(HopfGaloisStructures { action, structures, types })
}

pub fn format_subgroup(n: &[Vec<usize>]) -> Vec<String> {
    n.iter().map(|p| cycle_notation(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_subgroup_counts() {
        // three cyclic groups generated by 4-cycles and the normal Klein group
        assert_eq!(regular_subgroups(4).unwrap().len(), 4);
        assert_eq!(regular_subgroups(3).unwrap().len(), 1);
    }

    #[test]
    fn non_normal_cubic() {
        let s3 = Group::symmetric(3).unwrap();
        let t = s3.find("(12)").unwrap();
        let res = hopf_galois_structures(&s3, &[s3.identity(), t]).unwrap();
        assert_eq!(res.structures.len(), 1);
        assert_eq!(res.structures[0].len(), 3);
    }
}
