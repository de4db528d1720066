//! Subgroups of `S_n` acting on marked-point labels.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of elements a generated group may enumerate.
pub const DEFAULT_GROUP_CAP: usize = 10_000_000;

/// The enumeration cap, overridable through `MODQUOT_GROUP_CAP`.
pub fn group_cap() -> usize {
    std::env::var("MODQUOT_GROUP_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_GROUP_CAP)
}

/// Ordered, disjoint blocks covering `1..=n`. Labels inside a block are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockPartition {
    n: u32,
    blocks: Vec<Vec<u32>>,
}

impl BlockPartition {
    pub fn new(n: u32, blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = vec![false; n as usize];
        let mut sorted = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            if b.is_empty() {
                return Err(Error::Domain("empty block".into()));
            }
            b.sort_unstable();
            for &l in &b {
                if l == 0 || l > n {
                    return Err(Error::Domain(format!("label {l} out of range 1..={n}")));
                }
                if std::mem::replace(&mut seen[l as usize - 1], true) {
                    return Err(Error::Domain(format!("label {l} appears in two blocks")));
                }
            }
            sorted.push(b);
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::Domain(format!("label {} is not covered", missing + 1)));
        }
        Ok(BlockPartition { n, blocks: sorted })
    }

    /// Contiguous blocks `{1..n_1}, {n_1+1..n_1+n_2}, ...`.
    pub fn from_sizes(sizes: &[u32]) -> Result<Self> {
        let mut next = 1;
        let mut blocks = Vec::new();
        for &s in sizes {
            if s == 0 {
                return Err(Error::Domain("block sizes must be positive".into()));
            }
            blocks.push((next..next + s).collect());
            next += s;
        }
        Self::new(next - 1, blocks)
    }

    pub fn single(n: u32) -> Self {
        if n == 0 {
            BlockPartition { n, blocks: vec![] }
        } else {
            BlockPartition {
                n,
                blocks: vec![(1..=n).collect()],
            }
        }
    }

    pub fn singletons(n: u32) -> Self {
        BlockPartition {
            n,
            blocks: (1..=n).map(|l| vec![l]).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn sizes(&self) -> Vec<u32> {
        self.blocks.iter().map(|b| b.len() as u32).collect()
    }

    pub fn block_of(&self, label: u32) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&label).is_ok())
    }

    pub fn block_mask(&self, k: usize) -> u64 {
        self.blocks[k].iter().fold(0u64, |m, l| m | 1 << (l - 1))
    }

    /// Per-block counts of a label mask.
    pub fn counts_of(&self, mask: u64) -> Vec<u32> {
        self.blocks
            .iter()
            .map(|b| b.iter().filter(|l| mask >> (**l - 1) & 1 == 1).count() as u32)
            .collect()
    }
}

impl fmt::Display for BlockPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// A permutation of `1..=n`, stored as 0-based images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Permutation((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &im in &images {
            if im == 0 || im as usize > n || std::mem::replace(&mut seen[im as usize - 1], true) {
                return Err(Error::Domain(format!("not a permutation: {images:?}")));
            }
            out.push((im - 1) as u8);
        }
        Ok(Permutation(out))
    }

    /// Product of disjoint-or-not cycles, applied right to left.
    pub fn from_cycles(n: u32, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut perm = Self::identity(n);
        for cyc in cycles.iter().rev() {
            let mut seen = HashSet::new();
            for &l in cyc {
                if l == 0 || l > n {
                    return Err(Error::Domain(format!("cycle label {l} out of range 1..={n}")));
                }
                if !seen.insert(l) {
                    return Err(Error::Domain(format!("label {l} repeated in a cycle")));
                }
            }
            let mut c = Self::identity(n);
            for (j, &l) in cyc.iter().enumerate() {
                let next = cyc[(j + 1) % cyc.len()];
                c.0[l as usize - 1] = (next - 1) as u8;
            }
            perm = c.compose(&perm);
        }
        Ok(perm)
    }

    pub fn degree(&self) -> u32 {
        self.0.len() as u32
    }

    /// Image of a 1-based label.
    pub fn apply(&self, label: u32) -> u32 {
        self.0[label as usize - 1] as u32 + 1
    }

    /// 1-based images, suitable for relabelling classes.
    pub fn images(&self) -> Vec<u32> {
        self.0.iter().map(|&x| x as u32 + 1).collect()
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `Some((i, j))` with `i < j` when this is exactly the transposition `(i j)`.
    pub fn as_transposition(&self) -> Option<(u32, u32)> {
        let moved: Vec<usize> = (0..self.0.len()).filter(|&i| self.0[i] as usize != i).collect();
        match moved.as_slice() {
            [a, b] => Some((*a as u32 + 1, *b as u32 + 1)),
            _ => None,
        }
    }

    pub fn is_even(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x as u32 + 1);
                x = self.0[x] as usize;
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            write!(f, "({})", c.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Trivial,
    FullSymmetric,
    Alternating,
    BlockProduct(BlockPartition),
    Generated(Vec<Permutation>),
}

/// A subgroup of `S_n` acting on the marked points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    n: u32,
    kind: GroupKind,
}

impl GroupSpec {
    pub fn trivial(n: u32) -> Self {
        GroupSpec { n, kind: GroupKind::Trivial }
    }

    pub fn full_symmetric(n: u32) -> Self {
        GroupSpec { n, kind: GroupKind::FullSymmetric }
    }

    pub fn alternating(n: u32) -> Self {
        GroupSpec { n, kind: GroupKind::Alternating }
    }

    pub fn block_product(partition: BlockPartition) -> Self {
        GroupSpec {
            n: partition.n(),
            kind: GroupKind::BlockProduct(partition),
        }
    }

    pub fn generated(n: u32, generators: Vec<Permutation>) -> Result<Self> {
        if n > u8::MAX as u32 {
            return Err(Error::Domain("generated groups support at most 255 points".into()));
        }
        if let Some(p) = generators.iter().find(|p| p.degree() != n) {
            return Err(Error::Domain(format!("generator {p:?} does not act on 1..={n}")));
        }
        Ok(GroupSpec {
            n,
            kind: GroupKind::Generated(generators),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    /// Group order; structured kinds use closed forms, generated groups are enumerated.
    pub fn order(&self) -> Result<BigInt> {
        let fact = |k: u32| (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j));
        Ok(match &self.kind {
            GroupKind::Trivial => BigInt::one(),
            GroupKind::FullSymmetric => fact(self.n),
            GroupKind::Alternating if self.n < 2 => BigInt::one(),
            GroupKind::Alternating => fact(self.n) / 2,
            GroupKind::BlockProduct(p) => p.sizes().into_iter().map(fact).product(),
            GroupKind::Generated(_) => BigInt::from(self.enumerate(group_cap())?.len()),
        })
    }

    /// Every element of the group, or `GroupTooLarge` past `cap`.
    pub fn enumerate(&self, cap: usize) -> Result<Vec<Permutation>> {
        let n = self.n;
        match &self.kind {
            GroupKind::Trivial => Ok(vec![Permutation::identity(n)]),
            GroupKind::Generated(gens) => bfs_closure(n, gens, cap),
            GroupKind::FullSymmetric | GroupKind::Alternating => {
                let order = self.order()?;
                if order > BigInt::from(cap) {
                    return Err(Error::GroupTooLarge { cap });
                }
                let all = all_permutations(&(1..=n).collect::<Vec<_>>());
                let mut out = Vec::with_capacity(all.len());
                for imgs in all {
                    let p = Permutation::from_images(imgs)?;
                    if matches!(self.kind, GroupKind::FullSymmetric) || p.is_even() {
                        out.push(p);
                    }
                }
                Ok(out)
            }
            GroupKind::BlockProduct(part) => {
                if self.order()? > BigInt::from(cap) {
                    return Err(Error::GroupTooLarge { cap });
                }
                let mut out = vec![Permutation::identity(n)];
                for block in part.blocks() {
                    let mut next = Vec::new();
                    for arrangement in all_permutations(block) {
                        let mut images: Vec<u32> = (1..=n).collect();
                        for (src, dst) in block.iter().zip(&arrangement) {
                            images[*src as usize - 1] = *dst;
                        }
                        let local = Permutation::from_images(images)?;
                        for p in &out {
                            next.push(local.compose(p));
                        }
                    }
                    out = next;
                }
                Ok(out)
            }
        }
    }

    /// Unordered pairs `{i, j}` (as `i < j`) whose transposition lies in the group.
    pub fn transpositions(&self) -> Result<BTreeSet<(u32, u32)>> {
        let n = self.n;
        let within = |block: &[u32], out: &mut BTreeSet<(u32, u32)>| {
            for (a, &i) in block.iter().enumerate() {
                for &j in &block[a + 1..] {
                    out.insert((i.min(j), i.max(j)));
                }
            }
        };
        let mut out = BTreeSet::new();
        match &self.kind {
            GroupKind::Trivial | GroupKind::Alternating => {}
            GroupKind::FullSymmetric => within(&(1..=n).collect::<Vec<_>>(), &mut out),
            GroupKind::BlockProduct(p) => {
                for b in p.blocks() {
                    within(b, &mut out);
                }
            }
            GroupKind::Generated(_) => {
                for p in self.enumerate(group_cap())? {
                    if let Some(t) = p.as_transposition() {
                        out.insert(t);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Partition of `1..=n` into orbits; the group sits inside the symmetric
    /// block product over this partition.
    pub fn orbit_partition(&self) -> Result<BlockPartition> {
        let n = self.n;
        Ok(match &self.kind {
            GroupKind::Trivial => BlockPartition::singletons(n),
            GroupKind::FullSymmetric => BlockPartition::single(n),
            GroupKind::Alternating if n >= 3 => BlockPartition::single(n),
            GroupKind::Alternating => BlockPartition::singletons(n),
            GroupKind::BlockProduct(p) => p.clone(),
            GroupKind::Generated(gens) => {
                let mut uf = UnionFind::new(n as usize);
                for g in gens {
                    for l in 1..=n {
                        uf.union(l as usize - 1, g.apply(l) as usize - 1);
                    }
                }
                components(n, &mut uf)
            }
        })
    }

    /// Blocks for the profile basis of `R` and `K_G`, plus which blocks carry
    /// transpositions. `R` is invariant under the symmetric product over these
    /// blocks; points touched by no transposition are pooled into one block.
    pub fn ramification_basis(&self) -> Result<(BlockPartition, Vec<bool>)> {
        let n = self.n;
        Ok(match &self.kind {
            GroupKind::BlockProduct(p) => {
                let swaps = p.sizes().iter().map(|&s| s >= 2).collect();
                (p.clone(), swaps)
            }
            GroupKind::FullSymmetric => (BlockPartition::single(n), vec![n >= 2]),
            GroupKind::Trivial | GroupKind::Alternating => (BlockPartition::single(n), vec![false; (n > 0) as usize]),
            GroupKind::Generated(_) => {
                let ts = self.transpositions()?;
                let mut uf = UnionFind::new(n as usize);
                let mut touched = vec![false; n as usize];
                for &(i, j) in &ts {
                    uf.union(i as usize - 1, j as usize - 1);
                    touched[i as usize - 1] = true;
                    touched[j as usize - 1] = true;
                }
                let comps = components(n, &mut uf);
                let mut blocks = Vec::new();
                let mut swaps = Vec::new();
                let mut free = Vec::new();
                for b in comps.blocks() {
                    if b.len() >= 2 {
                        blocks.push(b.clone());
                        swaps.push(true);
                    } else if !touched[b[0] as usize - 1] {
                        free.push(b[0]);
                    }
                }
                if !free.is_empty() {
                    blocks.push(free);
                    swaps.push(false);
                }
                (BlockPartition::new(n, blocks)?, swaps)
            }
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GroupKind::Trivial => write!(f, "trivial on {} points", self.n),
            GroupKind::FullSymmetric => write!(f, "S_{}", self.n),
            GroupKind::Alternating => write!(f, "A_{}", self.n),
            GroupKind::BlockProduct(p) => {
                let sizes: Vec<String> = p.sizes().iter().map(u32::to_string).collect();
                write!(f, "S_{{{}}} on {}", sizes.join(","), p)
            }
            GroupKind::Generated(gens) => {
                let gs: Vec<String> = gens.iter().map(|g| format!("{g:?}")).collect();
                write!(f, "<{}> on {} points", gs.join(", "), self.n)
            }
        }
    }
}

/// Parses `Sn | An | S<k> | A<k> | trivial | prod:n1,n2,... | gen:(a b ...)(...);...`.
pub fn parse_group(text: &str, n: u32) -> Result<GroupSpec> {
    let t = text.trim();
    let bad = |msg: &str| Error::Parse(format!("group {t:?}: {msg}"));
    let degree_suffix = |rest: &str| -> Result<()> {
        if rest == "n" || rest.is_empty() {
            return Ok(());
        }
        let k: u32 = rest.parse().map_err(|_| bad("expected a degree"))?;
        if k != n {
            return Err(bad(&format!("degree {k} differs from n = {n}")));
        }
        Ok(())
    };
    if t.eq_ignore_ascii_case("trivial") {
        return Ok(GroupSpec::trivial(n));
    }
    if let Some(rest) = t.strip_prefix("prod:") {
        let sizes: Vec<u32> = rest
            .split(',')
            .map(|s| s.trim().parse::<u32>().map_err(|_| bad("block sizes must be positive integers")))
            .collect::<Result<_>>()?;
        if sizes.iter().sum::<u32>() != n {
            return Err(bad(&format!("block sizes sum to {}, not n = {n}", sizes.iter().sum::<u32>())));
        }
        return Ok(GroupSpec::block_product(BlockPartition::from_sizes(&sizes)?));
    }
    if let Some(rest) = t.strip_prefix("gen:") {
        let mut gens = Vec::new();
        for g in rest.split(';') {
            let cycles = parse_cycles(g.trim()).map_err(|e| bad(&e))?;
            gens.push(Permutation::from_cycles(n, &cycles)?);
        }
        return GroupSpec::generated(n, gens);
    }
    if let Some(rest) = t.strip_prefix('S') {
        degree_suffix(rest)?;
        return Ok(GroupSpec::full_symmetric(n));
    }
    if let Some(rest) = t.strip_prefix('A') {
        degree_suffix(rest)?;
        return Ok(GroupSpec::alternating(n));
    }
    Err(bad("unknown group syntax"))
}

fn parse_cycles(s: &str) -> std::result::Result<Vec<Vec<u32>>, String> {
    let mut out = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or("expected '('")?;
        let close = open.find(')').ok_or("unbalanced parenthesis")?;
        let body = &open[..close];
        let cyc: Vec<u32> = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|x| !x.is_empty())
            .map(|x| x.parse().map_err(|_| format!("bad label {x:?}")))
            .collect::<std::result::Result<_, _>>()?;
        if !cyc.is_empty() {
            out.push(cyc);
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(out)
}

fn bfs_closure(n: u32, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.compose(&p);
            if !seen.contains(&q) {
                if seen.len() >= cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                seen.insert(q.clone());
                order.push(q.clone());
                queue.push_back(q);
            }
        }
    }
    Ok(order)
}

fn all_permutations(items: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = items.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // lexicographic successor
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn components(n: u32, uf: &mut UnionFind) -> BlockPartition {
    let mut by_root: Vec<Vec<u32>> = vec![Vec::new(); n as usize];
    for l in 0..n as usize {
        let r = uf.find(l);
        by_root[r].push(l as u32 + 1);
    }
    let blocks = by_root.into_iter().filter(|b| !b.is_empty()).collect();
    BlockPartition::new(n, blocks).expect("union-find components partition 1..=n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let g = parse_group("prod:3,3,2", 8).unwrap();
        assert_eq!(g.kind(), &GroupKind::BlockProduct(BlockPartition::from_sizes(&[3, 3, 2]).unwrap()));
        assert_eq!(parse_group("An", 5).unwrap(), GroupSpec::alternating(5));
        assert_eq!(parse_group("S12", 12).unwrap(), GroupSpec::full_symmetric(12));
        let g = parse_group("gen:(1 2)(3 4)", 4).unwrap();
        assert_eq!(g.order().unwrap(), BigInt::from(2));
        assert_eq!(parse_group("trivial", 3).unwrap(), GroupSpec::trivial(3));
    }

    #[test]
    fn parse_errors() {
        assert!(parse_group("prod:3,3", 8).is_err());
        assert!(parse_group("prod:3,0,5", 8).is_err());
        assert!(parse_group("gen:(1 9)", 4).is_err());
        assert!(parse_group("gen:(1 2", 4).is_err());
        assert!(parse_group("S5", 6).is_err());
        assert!(parse_group("Z3", 3).is_err());
        assert!(parse_group("gen:(1 1)", 3).is_err());
    }

    #[test]
    fn transposition_examples() {
        let g = GroupSpec::block_product(BlockPartition::from_sizes(&[3, 2]).unwrap());
        let t: Vec<_> = g.transpositions().unwrap().into_iter().collect();
        assert_eq!(t, vec![(1, 2), (1, 3), (2, 3), (4, 5)]);
        assert!(GroupSpec::alternating(7).transpositions().unwrap().is_empty());
        let g = parse_group("gen:(1 2)(3 4)", 4).unwrap();
        assert!(g.transpositions().unwrap().is_empty());
        let g = parse_group("gen:(1 2);(2 3)", 4).unwrap();
        assert_eq!(g.transpositions().unwrap().len(), 3);
        assert_eq!(g.order().unwrap(), BigInt::from(6));
    }

    #[test]
    fn orbit_examples() {
        let g = parse_group("gen:(1 2 3)", 5).unwrap();
        assert_eq!(g.orbit_partition().unwrap().blocks(), &[vec![1, 2, 3], vec![4], vec![5]]);
        assert_eq!(GroupSpec::full_symmetric(4).orbit_partition().unwrap().blocks(), &[vec![1, 2, 3, 4]]);
        assert_eq!(GroupSpec::trivial(3).orbit_partition().unwrap().blocks(), &[vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(GroupSpec::full_symmetric(4).enumerate(100).unwrap().len(), 24);
        assert_eq!(GroupSpec::alternating(4).enumerate(100).unwrap().len(), 12);
        let bp = GroupSpec::block_product(BlockPartition::from_sizes(&[3, 2]).unwrap());
        let els = bp.enumerate(100).unwrap();
        assert_eq!(els.len(), 12);
        assert_eq!(els.iter().collect::<HashSet<_>>().len(), 12);
        assert!(matches!(GroupSpec::full_symmetric(9).enumerate(1000), Err(Error::GroupTooLarge { .. })));
        let big = parse_group("gen:(1 2 3 4 5 6 7 8);(1 2)", 8).unwrap();
        assert!(matches!(big.enumerate(100), Err(Error::GroupTooLarge { cap: 100 })));
    }

    #[test]
    fn brute_force_transposition_scan_agrees_for_structured_kinds() {
        let kinds = [
            GroupSpec::full_symmetric(5),
            GroupSpec::alternating(5),
            GroupSpec::block_product(BlockPartition::from_sizes(&[2, 3, 1]).unwrap()),
            GroupSpec::trivial(4),
        ];
        for g in kinds {
            let scanned: BTreeSet<_> = g
                .enumerate(10_000)
                .unwrap()
                .iter()
                .filter_map(Permutation::as_transposition)
                .collect();
            assert_eq!(scanned, g.transpositions().unwrap(), "{g}");
        }
    }

    #[test]
    fn ramification_basis_for_generated_group() {
        // ⟨(1 2), (3 4 5)⟩: only {1,2} carries a transposition
        let g = parse_group("gen:(1 2);(3 4 5)", 6).unwrap();
        let (p, swaps) = g.ramification_basis().unwrap();
        assert_eq!(p.blocks(), &[vec![1, 2], vec![3, 4, 5, 6]]);
        assert_eq!(swaps, vec![true, false]);
    }

    #[test]
    fn cycles_compose_right_to_left() {
        let p = Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        // (1 2)(2 3): 3 -> 2 -> 1
        assert_eq!(p.apply(3), 1);
        assert_eq!(p.apply(1), 2);
        assert!(p.is_even());
    }
}
