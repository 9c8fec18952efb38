//! Permutations and signed permutations: statistics, cycle supports,
//! enumeration, and the bijection with increasing planar forests.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::json;

use crate::arrangement::Flat;
use crate::error::{input, precondition, Error, Result};
use crate::report::{Check, Report};

/// Enumeration limits for `S_d` and `B_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub sym: usize,
    pub signed: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { sym: 8, signed: 6 }
    }
}

impl Bounds {
    /// Defaults overridden by `POLYALG_MAX_SYM` and `POLYALG_MAX_SIGNED`.
    pub fn from_env() -> Self {
        let mut b = Self::default();
        if let Some(v) = std::env::var("POLYALG_MAX_SYM")
            .ok()
            .and_then(|s| s.parse().ok())
        {
            b.sym = v;
        }
        if let Some(v) = std::env::var("POLYALG_MAX_SIGNED")
            .ok()
            .and_then(|s| s.parse().ok())
        {
            b.signed = v;
        }
        b
    }
}

/// A permutation of `[d]` stored by images: `img[i-1] = σ(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    img: Vec<u32>,
}

/// A signed permutation: `img[i-1] = σ(i) ∈ [±d]`, with `σ(-i) = -σ(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    img: Vec<i32>,
}

impl Permutation {
    pub fn from_images(img: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; img.len()];
        for &x in &img {
            let i = x as usize;
            if i == 0 || i > img.len() || seen[i - 1] {
                return input(format!("{img:?} is not a permutation"));
            }
            seen[i - 1] = true;
        }
        Ok(Self { img })
    }

    pub fn identity(d: usize) -> Self {
        Self {
            img: (1..=d as u32).collect(),
        }
    }

    /// Parses cycle notation over `[d]`, e.g. `(1 3)(2 6 5 8)`; omitted points are fixed.
    pub fn parse_cycles(s: &str, d: usize) -> Result<Self> {
        let mut img: Vec<u32> = (1..=d as u32).collect();
        let mut seen = BTreeSet::new();
        for cyc in parse_cycle_list(s)? {
            for (k, &a) in cyc.iter().enumerate() {
                if a <= 0 || a as usize > d || !seen.insert(a) {
                    return input(format!("bad element {a} in '{s}'"));
                }
                img[a as usize - 1] = cyc[(k + 1) % cyc.len()] as u32;
            }
        }
        Self::from_images(img)
    }

    pub fn d(&self) -> usize {
        self.img.len()
    }

    /// `σ(i)` for `i` in `1..=d`.
    pub fn apply(&self, i: u32) -> u32 {
        self.img[i as usize - 1]
    }

    pub fn images(&self) -> &[u32] {
        &self.img
    }

    /// Cycles, each starting at its least element, sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let d = self.d() as u32;
        let mut seen = vec![false; self.d()];
        let mut out = Vec::new();
        for i in 1..=d {
            if seen[i as usize - 1] {
                continue;
            }
            let mut c = vec![i];
            seen[i as usize - 1] = true;
            let mut j = self.apply(i);
            while j != i {
                seen[j as usize - 1] = true;
                c.push(j);
                j = self.apply(j);
            }
            out.push(c);
        }
        out
    }

    pub fn exc(&self) -> usize {
        self.img
            .iter()
            .enumerate()
            .filter(|(i, &x)| x as usize > i + 1)
            .count()
    }

    pub fn des(&self) -> usize {
        self.img.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Cycle partition as a braid flat.
    pub fn supp(&self) -> Flat {
        Flat::partition(
            self.cycles()
                .into_iter()
                .map(|c| c.into_iter().map(|x| x as i32).collect())
                .collect(),
        )
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

fn parse_cycle_list(s: &str) -> Result<Vec<Vec<i32>>> {
    let s = s.trim();
    let mut out = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let Some(r) = rest.strip_prefix('(') else {
            return input(format!("expected '(' in '{s}'"));
        };
        let Some(end) = r.find(')') else {
            return input(format!("unbalanced parentheses in '{s}'"));
        };
        let body = &r[..end];
        let cyc = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .or_else(|_| input(format!("bad element '{t}' in '{s}'")))
            })
            .collect::<Result<Vec<i32>>>()?;
        if cyc.is_empty() {
            return input(format!("empty cycle in '{s}'"));
        }
        out.push(cyc);
        rest = r[end + 1..].trim_start();
    }
    Ok(out)
}

/// Statistics of a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermStats {
    pub exc: usize,
    pub des: usize,
    pub supp: Flat,
}

pub fn stats(s: &Permutation) -> PermStats {
    PermStats {
        exc: s.exc(),
        des: s.des(),
        supp: s.supp(),
    }
}

impl SignedPermutation {
    pub fn from_images(img: Vec<i32>) -> Result<Self> {
        let d = img.len();
        let mut seen = vec![false; d];
        for &x in &img {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > d || seen[a - 1] {
                return input(format!("{img:?} is not a signed permutation"));
            }
            seen[a - 1] = true;
        }
        Ok(Self { img })
    }

    pub fn identity(d: usize) -> Self {
        Self {
            img: (1..=d as i32).collect(),
        }
    }

    /// Parses cycle notation over `[±d]`. A cycle whose negative is not
    /// listed gets it added; fixed points may be omitted.
    pub fn parse_cycles(s: &str, d: usize) -> Result<Self> {
        let mut map: Vec<Option<i32>> = vec![None; 2 * d + 1];
        let slot = |x: i32| (x + d as i32) as usize;
        for cyc in parse_cycle_list(s)? {
            for (k, &a) in cyc.iter().enumerate() {
                if a == 0 || a.unsigned_abs() as usize > d {
                    return input(format!("bad element {a} in '{s}'"));
                }
                let b = cyc[(k + 1) % cyc.len()];
                for (x, y) in [(a, b), (-a, -b)] {
                    match map[slot(x)] {
                        Some(v) if v != y => return input(format!("inconsistent cycles in '{s}'")),
                        _ => map[slot(x)] = Some(y),
                    }
                }
            }
        }
        let img: Vec<i32> = (1..=d as i32).map(|i| map[slot(i)].unwrap_or(i)).collect();
        Self::from_images(img)
    }

    pub fn d(&self) -> usize {
        self.img.len()
    }

    /// `σ(i)` for `i` in `[±d]`.
    pub fn apply(&self, i: i32) -> i32 {
        if i > 0 {
            self.img[i as usize - 1]
        } else {
            -self.img[(-i) as usize - 1]
        }
    }

    pub fn images(&self) -> &[i32] {
        &self.img
    }

    /// All cycles on `[±d]`, visiting `1, -1, 2, -2, ...` as starting points.
    pub fn cycles(&self) -> Vec<Vec<i32>> {
        let d = self.d() as i32;
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for i in (1..=d).flat_map(|i| [i, -i]) {
            if seen.contains(&i) {
                continue;
            }
            let mut c = vec![i];
            seen.insert(i);
            let mut j = self.apply(i);
            while j != i {
                seen.insert(j);
                c.push(j);
                j = self.apply(j);
            }
            out.push(c);
        }
        out
    }

    pub fn exc(&self) -> usize {
        self.img
            .iter()
            .enumerate()
            .filter(|(i, &x)| x > *i as i32 + 1)
            .count()
    }

    pub fn fneg(&self) -> usize {
        self.img.iter().filter(|&&x| x < 0).count()
    }

    pub fn fexc(&self) -> usize {
        2 * self.exc() + self.fneg()
    }

    pub fn exc_b(&self) -> usize {
        self.exc() + (self.fneg() + 1) / 2
    }

    /// Descents with the convention `σ(0) = 0`.
    pub fn des(&self) -> usize {
        let mut prev = 0;
        let mut n = 0;
        for &x in &self.img {
            if prev > x {
                n += 1;
            }
            prev = x;
        }
        n
    }

    /// Cycle partition with cycles through `i` and `-i` merged into the zero block.
    pub fn supp(&self) -> Flat {
        let mut zero = Vec::new();
        let mut blocks = Vec::new();
        for c in self.cycles() {
            if c.iter().any(|x| c.contains(&-x)) {
                zero.extend(c.iter().filter(|&&x| x > 0));
            } else if c.iter().map(|x| x.abs()).min() == c.iter().copied().filter(|&x| x > 0).min()
            {
                blocks.push(c);
            }
        }
        Flat::signed(zero, blocks)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

/// Statistics of a signed permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedStats {
    pub exc: usize,
    pub fneg: usize,
    pub fexc: usize,
    pub exc_b: usize,
    pub des: usize,
    pub supp: Flat,
}

pub fn stats_signed(s: &SignedPermutation) -> SignedStats {
    SignedStats {
        exc: s.exc(),
        fneg: s.fneg(),
        fexc: s.fexc(),
        exc_b: s.exc_b(),
        des: s.des(),
        supp: s.supp(),
    }
}

/// Position of `i` in the order `≺`: negatives by increasing absolute
/// value, then positives increasing.
fn prec_key(i: i32) -> (u8, i32) {
    if i < 0 {
        (0, -i)
    } else {
        (1, i)
    }
}

/// Number of `≺`-excedances of the cyclic permutation `c_0 -> c_1 -> ... -> c_0`
/// of an involution-exclusive set.
pub fn exc_prec(cycle: &[i32]) -> Result<usize> {
    let set: BTreeSet<i32> = cycle.iter().copied().collect();
    if set.len() != cycle.len() || cycle.contains(&0) {
        return precondition("cycle must list distinct nonzero elements");
    }
    if cycle.iter().any(|x| set.contains(&-x)) {
        return precondition("cycle support is not involution-exclusive");
    }
    let n = cycle.len();
    Ok((0..n)
        .filter(|&k| prec_key(cycle[k]) < prec_key(cycle[(k + 1) % n]))
        .count())
}

/// `exc_B` of the restriction of `σ` to an involution-inclusive union of cycles `zero` (absolute values).
pub fn exc_b_restricted(s: &SignedPermutation, zero: &[i32]) -> usize {
    let exc = zero.iter().filter(|&&i| s.apply(i) > i).count();
    let fneg = zero.iter().filter(|&&i| s.apply(i) < 0).count();
    exc + (fneg + 1) / 2
}

/// A planar rooted tree with increasing labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    pub root: u32,
    pub children: Vec<Tree>,
}

/// A sequence of increasing trees whose node sets partition `[d]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncreasingForest {
    pub trees: Vec<Tree>,
}

impl Tree {
    pub fn leaf(root: u32) -> Self {
        Self {
            root,
            children: Vec::new(),
        }
    }

    pub fn nodes(&self) -> Vec<u32> {
        let mut v = vec![self.root];
        for c in &self.children {
            v.extend(c.nodes());
        }
        v
    }

    /// Leaves, a lone root excluded.
    pub fn leaves(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for c in &self.children {
            if c.children.is_empty() {
                out.push(c.root);
            } else {
                out.extend(c.leaves());
            }
        }
        out
    }

    /// Node sets of the paths from each leaf to the root, leaves left to right.
    pub fn leaf_paths(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for c in &self.children {
            if c.children.is_empty() {
                out.push(vec![c.root, self.root]);
            } else {
                for mut p in c.leaf_paths() {
                    p.push(self.root);
                    out.push(p);
                }
            }
        }
        out
    }

    fn check(&self) -> bool {
        self.children
            .iter()
            .all(|c| c.root > self.root && c.check())
            && self.children.windows(2).all(|w| w[0].root < w[1].root)
    }

    fn postorder(&self, out: &mut Vec<u32>) {
        for c in &self.children {
            c.postorder(out);
        }
        out.push(self.root);
    }
}

impl IncreasingForest {
    pub fn num_leaves(&self) -> usize {
        self.trees.iter().map(|t| t.leaves().len()).sum()
    }

    /// Paths `J_i` from every leaf to its root.
    pub fn leaf_paths(&self) -> Vec<Vec<u32>> {
        self.trees.iter().flat_map(|t| t.leaf_paths()).collect()
    }

    pub fn component_sets(&self) -> Vec<Vec<u32>> {
        self.trees
            .iter()
            .map(|t| {
                let mut v = t.nodes();
                v.sort_unstable();
                v
            })
            .collect()
    }
}

/// Children of a node built from the word preceding it in its cycle:
/// the right-to-left minima split the word into segments, each ending at a child.
fn build_children(word: &[u32]) -> Vec<Tree> {
    let mut minima = Vec::new();
    let mut best = u32::MAX;
    for (k, &x) in word.iter().enumerate().rev() {
        if x < best {
            best = x;
            minima.push(k);
        }
    }
    minima.reverse();
    let mut out = Vec::new();
    let mut start = 0;
    for k in minima {
        out.push(Tree {
            root: word[k],
            children: build_children(&word[start..k]),
        });
        start = k + 1;
    }
    out
}

/// The increasing forest `t(σ)`: one tree per cycle, built from the cycle
/// written with its minimum last.
pub fn forest_of(s: &Permutation) -> IncreasingForest {
    let trees = s
        .cycles()
        .into_iter()
        .map(|c| {
            // c starts at its minimum; rotate so the minimum is last.
            let word: Vec<u32> = c[1..].to_vec();
            Tree {
                root: c[0],
                children: build_children(&word),
            }
        })
        .collect();
    IncreasingForest { trees }
}

/// Inverse of [`forest_of`]: each tree read in post-order gives one cycle.
pub fn perm_of(t: &IncreasingForest, d: usize) -> Result<Permutation> {
    let mut all: Vec<u32> = t.trees.iter().flat_map(|x| x.nodes()).collect();
    all.sort_unstable();
    if all != (1..=d as u32).collect::<Vec<_>>() {
        return Err(Error::Input("forest node sets do not partition [d]".into()));
    }
    if !t.trees.iter().all(Tree::check) {
        return Err(Error::Input(
            "forest is not increasing with ordered children".into(),
        ));
    }
    let mut img = vec![0u32; d];
    for tree in &t.trees {
        let mut word = Vec::new();
        tree.postorder(&mut word);
        for k in 0..word.len() {
            img[word[k] as usize - 1] = word[(k + 1) % word.len()];
        }
    }
    Permutation::from_images(img)
}

fn next_permutation(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All of `S_d` in lexicographic order of image words.
pub fn enumerate_sym(d: usize, bounds: &Bounds) -> Result<Vec<Permutation>> {
    if d > bounds.sym {
        return Err(Error::Resource(format!(
            "S_{d} exceeds the enumeration bound {}",
            bounds.sym
        )));
    }
    let mut v: Vec<u32> = (1..=d as u32).collect();
    let mut out = vec![Permutation { img: v.clone() }];
    while next_permutation(&mut v) {
        out.push(Permutation { img: v.clone() });
    }
    Ok(out)
}

/// All of `B_d`: permutations in lexicographic order, then sign masks.
pub fn enumerate_signed(d: usize, bounds: &Bounds) -> Result<Vec<SignedPermutation>> {
    if d > bounds.signed {
        return Err(Error::Resource(format!(
            "B_{d} exceeds the enumeration bound {}",
            bounds.signed
        )));
    }
    let perms = enumerate_sym(d, &Bounds { sym: d, signed: d })?;
    let mut out = Vec::with_capacity(perms.len() << d);
    for p in perms {
        for mask in 0u32..(1 << d) {
            let img = p
                .img
                .iter()
                .enumerate()
                .map(|(i, &x)| {
                    if mask >> i & 1 == 1 {
                        -(x as i32)
                    } else {
                        x as i32
                    }
                })
                .collect();
            out.push(SignedPermutation { img });
        }
    }
    Ok(out)
}

/// Number of `σ ∈ S_d` with `supp σ = x` and `exc σ = r`.
pub fn count_sym(d: usize, x: &Flat, r: usize, bounds: &Bounds) -> Result<usize> {
    Ok(enumerate_sym(d, bounds)?
        .iter()
        .filter(|s| s.exc() == r && &s.supp() == x)
        .count())
}

/// Number of `σ ∈ B_d` with `supp σ = x` and `exc_B σ = r`.
pub fn count_signed(d: usize, x: &Flat, r: usize, bounds: &Bounds) -> Result<usize> {
    Ok(enumerate_signed(d, bounds)?
        .iter()
        .filter(|s| s.exc_b() == r && &s.supp() == x)
        .count())
}

/// Round trip `perm_of(forest_of(σ)) = σ` over all of `S_d`, with leaves
/// counting excedances and tree node sets equal to the cycle partition.
pub fn forest_check(d: usize, bounds: &Bounds) -> Result<Report> {
    let mut round_trip = None;
    let mut leaves = None;
    let mut components = None;
    let mut n = 0usize;
    for s in enumerate_sym(d, bounds)? {
        n += 1;
        let t = forest_of(&s);
        if perm_of(&t, d)? != s && round_trip.is_none() {
            round_trip = Some(format!("σ = {s}"));
        }
        if t.num_leaves() != s.exc() && leaves.is_none() {
            leaves = Some(format!(
                "σ = {s}: {} leaves, exc {}",
                t.num_leaves(),
                s.exc()
            ));
        }
        let blocks: Vec<Vec<i32>> = t
            .component_sets()
            .into_iter()
            .map(|b| b.into_iter().map(|i| i as i32).collect())
            .collect();
        if Flat::partition(blocks) != s.supp() && components.is_none() {
            components = Some(format!("σ = {s}"));
        }
    }
    let mut rep = Report::new();
    rep.push(
        Check::new(format!("S{d}/forest_round_trip"), true)
            .mismatch(round_trip)
            .with_detail(json!({"permutations": n})),
    );
    rep.push(Check::new(format!("S{d}/leaves_equal_excedances"), true).mismatch(leaves));
    rep.push(Check::new(format!("S{d}/components_equal_support"), true).mismatch(components));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::ArrangementKind;

    #[test]
    fn worked_example_stats() {
        let s = Permutation::parse_cycles("(1 3)(2 6 5 8)(4)(7)", 8).unwrap();
        let st = stats(&s);
        assert_eq!(st.exc, 3);
        let k = ArrangementKind::BraidA(8);
        assert_eq!(k.flat_to_string(&st.supp), "{13,2568,4,7}");
        let c = Permutation::from_images(vec![2, 3, 1]).unwrap();
        assert_eq!(c.exc(), 2);
        let id = Permutation::identity(5);
        assert_eq!((id.exc(), id.des()), (0, 0));
        assert_eq!(id.supp(), ArrangementKind::BraidA(5).top());
    }

    #[test]
    fn signed_example_stats() {
        let s = SignedPermutation::parse_cycles("(1)(-1)(2 -2)(3 4 -3 -4)(5 -6)(-5 6)", 6).unwrap();
        let k = ArrangementKind::TypeB(6);
        let want = k.parse_flat("{0:2 -2 3 -3 4 -4,1,-1,5 -6,-5 6}").unwrap();
        assert_eq!(s.supp(), want);
        let neg = SignedPermutation::from_images(vec![-1, -2]).unwrap();
        let st = stats_signed(&neg);
        assert_eq!((st.exc, st.fneg, st.exc_b), (0, 2, 1));
        assert_eq!(st.supp, ArrangementKind::TypeB(2).bottom());
        let id = SignedPermutation::identity(3);
        assert_eq!(id.exc_b(), 0);
        assert_eq!(id.supp(), ArrangementKind::TypeB(3).top());
    }

    #[test]
    fn signed_cycle_printing() {
        let s = SignedPermutation::parse_cycles("(1)(-1)(2 -2)(3 4 -3 -4)", 4).unwrap();
        assert_eq!(s.to_string(), "(1)(-1)(2 -2)(3 4 -3 -4)");
        assert!(SignedPermutation::parse_cycles("(1 2)(-1 -3)", 3).is_err());
    }

    #[test]
    fn forest_worked_example() {
        let s = Permutation::parse_cycles("(7 3 6 9 5 1)(4 10 8 2)", 10).unwrap();
        let t = forest_of(&s);
        let want = IncreasingForest {
            trees: vec![
                Tree {
                    root: 1,
                    children: vec![
                        Tree {
                            root: 3,
                            children: vec![Tree::leaf(7)],
                        },
                        Tree {
                            root: 5,
                            children: vec![Tree::leaf(6), Tree::leaf(9)],
                        },
                    ],
                },
                Tree {
                    root: 2,
                    children: vec![
                        Tree::leaf(4),
                        Tree {
                            root: 8,
                            children: vec![Tree::leaf(10)],
                        },
                    ],
                },
            ],
        };
        assert_eq!(t, want);
        assert_eq!(t.num_leaves(), 5);
        assert_eq!(s.exc(), 5);
        let paths: Vec<Vec<u32>> = t.leaf_paths();
        assert_eq!(
            paths,
            vec![
                vec![7, 3, 1],
                vec![6, 5, 1],
                vec![9, 5, 1],
                vec![4, 2],
                vec![10, 8, 2]
            ]
        );
        assert_eq!(perm_of(&t, 10).unwrap(), s);
    }

    #[test]
    fn forest_identity_and_rejects() {
        let t = forest_of(&Permutation::identity(4));
        assert_eq!(t.trees.len(), 4);
        assert_eq!(t.num_leaves(), 0);
        let bad = IncreasingForest {
            trees: vec![Tree {
                root: 2,
                children: vec![Tree::leaf(1)],
            }],
        };
        assert!(perm_of(&bad, 2).is_err());
    }

    #[test]
    fn filtered_enumerations() {
        let b = Bounds::default();
        let bot = ArrangementKind::BraidA(3).bottom();
        let mut excs: Vec<usize> = enumerate_sym(3, &b)
            .unwrap()
            .iter()
            .filter(|s| s.supp() == bot)
            .map(|s| s.exc())
            .collect();
        excs.sort_unstable();
        assert_eq!(excs, vec![1, 2]);
        let botb = ArrangementKind::TypeB(2).bottom();
        let mut eb: Vec<usize> = enumerate_signed(2, &b)
            .unwrap()
            .iter()
            .filter(|s| s.supp() == botb)
            .map(|s| s.exc_b())
            .collect();
        eb.sort_unstable();
        assert_eq!(eb, vec![1, 1, 2]);
        assert_eq!(enumerate_sym(5, &b).unwrap().len(), 120);
        assert!(enumerate_sym(9, &b).is_err());
    }

    #[test]
    fn exc_prec_basics() {
        assert_eq!(exc_prec(&[3]).unwrap(), 0);
        assert!(exc_prec(&[1, -1]).is_err());
        // negatives precede positives, ordered by absolute value
        assert_eq!(exc_prec(&[-2, 1]).unwrap(), 1);
        assert_eq!(exc_prec(&[-1, -2]).unwrap(), 1);
    }
}
