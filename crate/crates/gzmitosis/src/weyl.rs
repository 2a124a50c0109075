//! Weyl-group combinatorics for types A (symmetric groups) and C (signed permutations).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Coxeter type: `A` is the symmetric group S_{n+1}, `C` the hyperoctahedral group B_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GroupType {
    A,
    C,
}

/// A word in the simple generators, each letter in 1..=n.
pub type Word = Vec<usize>;

/// Element of S_{n+1} in one-line notation: the images of 1..n+1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Permutation {
    pub one_line: Vec<usize>,
}

/// Element of B_n: images of 1..n with signs, absolute values pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignedPermutation {
    pub images: Vec<i64>,
}

/// A group element of either type, stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GroupElement {
    A(Permutation),
    C(SignedPermutation),
}

impl GroupElement {
    pub fn group_type(&self) -> GroupType {
        match self {
            GroupElement::A(_) => GroupType::A,
            GroupElement::C(_) => GroupType::C,
        }
    }

    /// Rank n of the group the element belongs to.
    pub fn rank(&self) -> usize {
        match self {
            GroupElement::A(p) => p.one_line.len() - 1,
            GroupElement::C(s) => s.images.len(),
        }
    }

    /// One-line images as signed integers (always positive in type A).
    pub fn line(&self) -> Vec<i64> {
        match self {
            GroupElement::A(p) => p.one_line.iter().map(|&v| v as i64).collect(),
            GroupElement::C(s) => s.images.clone(),
        }
    }

    fn from_line(group: GroupType, line: Vec<i64>) -> GroupElement {
        match group {
            GroupType::A => GroupElement::A(Permutation {
                one_line: line.into_iter().map(|v| v as usize).collect(),
            }),
            GroupType::C => GroupElement::C(SignedPermutation { images: line }),
        }
    }
}

fn degree(group: GroupType, n: usize) -> usize {
    match group {
        GroupType::A => n + 1,
        GroupType::C => n,
    }
}

/// Builds an element from one-line images, validating that absolute values
/// enumerate 1..=len exactly once and that type A images are positive.
pub fn element_from_images(group: GroupType, images: &[i64]) -> Result<GroupElement> {
    if images.is_empty() || (group == GroupType::A && images.len() < 2) {
        return Err(Error::Domain("one-line notation is too short".into()));
    }
    let mut seen = vec![false; images.len()];
    for &v in images {
        if group == GroupType::A && v < 0 {
            return Err(Error::Domain("type A images must be positive".into()));
        }
        let a = v.unsigned_abs() as usize;
        if a == 0 || a > images.len() || seen[a - 1] {
            return Err(Error::Domain(format!("invalid one-line notation {images:?}")));
        }
        seen[a - 1] = true;
    }
    Ok(GroupElement::from_line(group, images.to_vec()))
}

fn check_rank(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("rank must be at least 1".into()));
    }
    Ok(())
}

/// Identity element of the rank-n group of the given type.
pub fn identity(group: GroupType, n: usize) -> GroupElement {
    let line = (1..=degree(group, n) as i64).collect();
    GroupElement::from_line(group, line)
}

/// Longest element: the order-reversing permutation in type A, minus the identity in type C.
pub fn w0(group: GroupType, n: usize) -> GroupElement {
    let m = degree(group, n) as i64;
    let line = match group {
        GroupType::A => (1..=m).rev().collect(),
        GroupType::C => (1..=m).map(|v| -v).collect(),
    };
    GroupElement::from_line(group, line)
}

/// Right-multiplies by the simple generator s_i.
pub fn apply_generator(el: &GroupElement, i: usize) -> Result<GroupElement> {
    let n = el.rank();
    if i == 0 || i > n {
        return Err(Error::Domain(format!("generator index {i} out of range 1..={n}")));
    }
    let mut line = el.line();
    match el.group_type() {
        GroupType::A => line.swap(i - 1, i),
        GroupType::C => {
            if i == 1 {
                line[0] = -line[0];
            } else {
                line.swap(i - 2, i - 1);
            }
        }
    }
    Ok(GroupElement::from_line(el.group_type(), line))
}

/// Product s_{i_1}...s_{i_ℓ} of the word's letters; identity for the empty word.
pub fn evaluate(group: GroupType, n: usize, word: &[usize]) -> Result<GroupElement> {
    check_rank(n)?;
    let mut el = identity(group, n);
    for &letter in word {
        el = apply_generator(&el, letter)?;
    }
    Ok(el)
}

/// Group product x·y, with y applied first: (x·y)(j) = x(y(j)).
pub fn product(x: &GroupElement, y: &GroupElement) -> GroupElement {
    assert_eq!(x.group_type(), y.group_type());
    assert_eq!(x.rank(), y.rank());
    let xl = x.line();
    let line = y
        .line()
        .iter()
        .map(|&v| {
            let img = xl[(v.unsigned_abs() as usize) - 1];
            if v < 0 {
                -img
            } else {
                img
            }
        })
        .collect();
    GroupElement::from_line(x.group_type(), line)
}

/// Inverse element.
pub fn inverse(el: &GroupElement) -> GroupElement {
    let line = el.line();
    let mut inv = vec![0i64; line.len()];
    for (pos, &v) in line.iter().enumerate() {
        let j = (pos + 1) as i64;
        inv[(v.unsigned_abs() as usize) - 1] = if v < 0 { -j } else { j };
    }
    GroupElement::from_line(el.group_type(), inv)
}

/// Coxeter length: inversions in type A, inversions plus negative-image weights in type C.
pub fn length(el: &GroupElement) -> usize {
    let line = el.line();
    let mut inv = 0usize;
    for i in 0..line.len() {
        for j in i + 1..line.len() {
            if line[i] > line[j] {
                inv += 1;
            }
        }
    }
    match el.group_type() {
        GroupType::A => inv,
        GroupType::C => {
            let neg: usize = line.iter().filter(|&&v| v < 0).map(|v| v.unsigned_abs() as usize).sum();
            inv + neg
        }
    }
}

/// Whether the word is a reduced expression for its own product.
pub fn is_reduced(group: GroupType, n: usize, word: &[usize]) -> Result<bool> {
    let el = evaluate(group, n, word)?;
    Ok(length(&el) == word.len())
}

/// The block word (s_1)(s_2 s_1 s_2)...(s_n...s_2 s_1 s_2...s_n), of total length n².
pub fn w0_bar(n: usize) -> Word {
    let mut word = Vec::with_capacity(n * n);
    for k in 1..=n {
        word.extend((1..=k).rev());
        word.extend(2..=k);
    }
    word
}

/// All position subsets of `host` (1-based, ascending) whose subword is reduced
/// and multiplies to `target`; sorted lexicographically.
pub fn reduced_subwords(
    group: GroupType,
    n: usize,
    host: &[usize],
    target: &GroupElement,
) -> Result<Vec<Vec<usize>>> {
    check_rank(n)?;
    if host.len() > 16 {
        return Err(Error::Capacity(format!(
            "subword host length {} exceeds the exhaustive limit 16",
            host.len()
        )));
    }
    let want = length(target);
    let mut found = BTreeSet::new();
    for mask in 0u32..(1u32 << host.len()) {
        if mask.count_ones() as usize != want {
            continue;
        }
        let mut el = identity(group, n);
        let mut positions = Vec::with_capacity(want);
        for (idx, &letter) in host.iter().enumerate() {
            if mask & (1 << idx) != 0 {
                el = apply_generator(&el, letter)?;
                positions.push(idx + 1);
            }
        }
        if &el == target {
            found.insert(positions);
        }
    }
    Ok(found.into_iter().collect())
}

/// One reduced word for the element, built by repeatedly taking the smallest descent.
pub fn reduced_word(el: &GroupElement) -> Word {
    let n = el.rank();
    let mut cur = el.clone();
    let mut tail = Vec::new();
    let mut len = length(&cur);
    while len > 0 {
        for i in 1..=n {
            let next = apply_generator(&cur, i).expect("generator index in range");
            let next_len = length(&next);
            if next_len < len {
                tail.push(i);
                cur = next;
                len = next_len;
                break;
            }
        }
    }
    tail.reverse();
    tail
}

/// Every reduced word for the element, sorted lexicographically.
pub fn all_reduced_words(el: &GroupElement) -> Result<Vec<Word>> {
    if el.rank() > 5 {
        return Err(Error::Capacity(format!(
            "reduced word enumeration limited to rank 5, got {}",
            el.rank()
        )));
    }
    let n = el.rank();
    let mut out = Vec::new();
    if length(el) == 0 {
        out.push(Vec::new());
        return Ok(out);
    }
    for i in 1..=n {
        let shorter = apply_generator(el, i)?;
        if length(&shorter) < length(el) {
            for mut word in all_reduced_words(&shorter)? {
                word.push(i);
                out.push(word);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Every element of the group, sorted by one-line notation.
pub fn all_elements(group: GroupType, n: usize) -> Result<Vec<GroupElement>> {
    check_rank(n)?;
    if n > 5 {
        return Err(Error::Capacity(format!("group enumeration limited to rank 5, got {n}")));
    }
    let m = degree(group, n);
    let mut perms = Vec::new();
    let mut current = Vec::with_capacity(m);
    collect_permutations(m, &mut current, &mut perms);
    let mut out = BTreeSet::new();
    for p in &perms {
        match group {
            GroupType::A => {
                out.insert(GroupElement::from_line(group, p.clone()));
            }
            GroupType::C => {
                for signs in 0u32..(1u32 << m) {
                    let line = p
                        .iter()
                        .enumerate()
                        .map(|(k, &v)| if signs & (1 << k) != 0 { -v } else { v })
                        .collect();
                    out.insert(GroupElement::from_line(group, line));
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

fn collect_permutations(m: usize, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if current.len() == m {
        out.push(current.clone());
        return;
    }
    for v in 1..=m as i64 {
        if !current.contains(&v) {
            current.push(v);
            collect_permutations(m, current, out);
            current.pop();
        }
    }
}
