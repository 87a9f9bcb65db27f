//! Symmetric-group combinatorics: inversion length, reduced words, shuffles,
//! Young subgroups and reduced decompositions.

use std::collections::HashSet;
use std::fmt;

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// Stored 0-based internally: `images[i] = w(i + 1) - 1`. Composition follows
/// functions: `(a * b)(i) = a(b(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    /// From 1-based one-line notation, e.g. `[3, 4, 1, 2]`.
    pub fn from_one_line(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
        }
        Some(Self { images: images.iter().map(|x| x - 1).collect() })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x)
        });
        Self { images }
    }

    /// The simple transposition `s_i` (1-based `i`, swapping `i` and `i+1`) in `S_n`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not in S_{n}");
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Self { images }
    }

    /// Product `s_{i_1} s_{i_2} ... s_{i_l}` in `S_n`.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(n), |acc, &i| acc.compose(&Self::simple(n, i)))
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        Self { images: other.images.iter().map(|&j| self.images[j]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Self { images: inv }
    }

    /// Block sum: `self` acts on the first `self.degree()` points, `other` on the rest.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.degree();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|x| x + n));
        Self { images }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// A reduced word: repeatedly strip the rightmost generator `s_i` at the
    /// largest descent `i`. The word has length `self.length()` and
    /// `Perm::from_word(n, &w) == self`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(i) = (0..w.len().saturating_sub(1)).rev().find(|&i| w[i] > w[i + 1]) {
            // w = (w s_i) s_i with l(w s_i) = l(w) - 1
            w.swap(i, i + 1);
            rev.push(i + 1);
        }
        rev.reverse();
        rev
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.one_line())
    }
}

/// The shuffles for a composition `(i_1, ..., i_k)` of `n`: permutations that
/// are increasing on each consecutive block of sizes `i_1, ..., i_k`.
#[derive(Clone, Debug)]
pub struct ShuffleSet {
    pub parts: Vec<usize>,
    pub members: Vec<Perm>,
}

impl ShuffleSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Perm> {
        self.members.iter()
    }
}

/// Enumerates all `(i_1, ..., i_k)`-shuffles by assigning an increasing set of
/// target positions to each block in turn.
pub fn shuffles(parts: &[usize]) -> ShuffleSet {
    assert!(!parts.is_empty() && parts.iter().all(|&p| p >= 1), "parts must be a composition");
    let n: usize = parts.iter().sum();
    let mut members = Vec::new();
    let mut images = vec![usize::MAX; n];
    let mut free = vec![true; n];
    assign_blocks(parts, 0, 0, &mut images, &mut free, &mut members);
    ShuffleSet { parts: parts.to_vec(), members }
}

fn assign_blocks(
    parts: &[usize],
    block: usize,
    start: usize,
    images: &mut Vec<usize>,
    free: &mut Vec<bool>,
    out: &mut Vec<Perm>,
) {
    if block == parts.len() {
        out.push(Perm::from_zero_based(images.clone()));
        return;
    }
    let avail: Vec<usize> = (0..free.len()).filter(|&p| free[p]).collect();
    for subset in combinations(&avail, parts[block]) {
        for (k, &pos) in subset.iter().enumerate() {
            images[start + k] = pos;
            free[pos] = false;
        }
        assign_blocks(parts, block + 1, start + parts[block], images, free, out);
        for &pos in &subset {
            free[pos] = true;
        }
    }
}

/// All `k`-element subsets of `items`, each in increasing order, in
/// lexicographic order.
pub fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// All permutations of `S_n`, in lexicographic order of one-line notation.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(Perm::from_zero_based(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

/// The Young subgroup `S_{i_1} x ... x S_{i_k}` inside `S_{i_1 + ... + i_k}`.
pub fn young_subgroup(parts: &[usize]) -> Vec<Perm> {
    let mut acc = vec![Perm::identity(0)];
    for &p in parts {
        let block = all_perms(p);
        acc = acc.iter().flat_map(|a| block.iter().map(move |b| a.direct_sum(b))).collect();
    }
    acc
}

/// Embeds each permutation as `1_{S_left} x w x 1_{S_right}`.
pub fn embed(perms: &[Perm], left: usize, right: usize) -> Vec<Perm> {
    let l = Perm::identity(left);
    let r = Perm::identity(right);
    perms.iter().map(|w| l.direct_sum(w).direct_sum(&r)).collect()
}

/// The block transposition `chi_{m,n}`: `1..m -> n+1..n+m`, `m+1..m+n -> 1..n`.
pub fn chi(m: usize, n: usize) -> Perm {
    let images = (0..m).map(|i| n + i).chain(0..n).collect();
    Perm::from_zero_based(images)
}

/// Checks that `S1 x S2 -> S3, (a, b) -> ab` is a bijection with additive lengths.
pub fn is_reduced_decomposition(s1: &[Perm], s2: &[Perm], s3: &[Perm]) -> bool {
    if s1.len() * s2.len() != s3.len() {
        return false;
    }
    let target: HashSet<&Perm> = s3.iter().collect();
    if target.len() != s3.len() {
        return false;
    }
    let mut hit = HashSet::with_capacity(s3.len());
    for a in s1 {
        for b in s2 {
            if a.degree() != b.degree() {
                return false;
            }
            let ab = a.compose(b);
            if ab.length() != a.length() + b.length() || !target.contains(&ab) || !hit.insert(ab) {
                return false;
            }
        }
    }
    hit.len() == s3.len()
}

/// `l(J; K) = #{(j, k) : j in J, k in K, j > k}`.
pub fn cross_inversions(j: &[usize], k: &[usize]) -> usize {
    j.iter().map(|a| k.iter().filter(|b| a > b).count()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Perm {
        Perm::from_one_line(v).unwrap()
    }

    #[test]
    fn length_examples() {
        assert_eq!(Perm::identity(4).length(), 0);
        assert_eq!(p(&[3, 2, 1]).length(), 3);
        assert_eq!(p(&[3, 4, 1, 2]).length(), 4);
    }

    #[test]
    fn reduced_word_examples() {
        assert!(Perm::identity(3).reduced_word().is_empty());
        assert_eq!(Perm::simple(2, 1).reduced_word(), vec![1]);
        let w0 = p(&[3, 2, 1]);
        let word = w0.reduced_word();
        assert_eq!(word, vec![2, 1, 2]);
        assert_eq!(Perm::from_word(3, &word), w0);
        assert_eq!(Perm::from_word(3, &[1, 2, 1]), w0);
    }

    #[test]
    fn reduced_words_multiply_back() {
        for n in 1..=5 {
            for w in all_perms(n) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(Perm::from_word(n, &word), w);
            }
        }
    }

    #[test]
    fn shuffle_examples() {
        let s = shuffles(&[1, 1]);
        assert_eq!(s.members, vec![Perm::identity(2), Perm::simple(2, 1)]);
        let s = shuffles(&[2, 1]);
        let mut lens: Vec<usize> = s.iter().map(Perm::length).collect();
        lens.sort();
        assert_eq!(lens, vec![0, 1, 2]);
        assert_eq!(shuffles(&[2, 2]).len(), 6);
        assert_eq!(shuffles(&[1, 2, 1]).len(), 12);
    }

    #[test]
    fn shuffles_match_filtered_group() {
        for parts in [vec![1, 2], vec![2, 2], vec![1, 1, 2], vec![3, 1], vec![2, 1, 2]] {
            let n = parts.iter().sum();
            let mut bounds = vec![0];
            for p in &parts {
                bounds.push(bounds.last().unwrap() + p);
            }
            let mut brute: Vec<Perm> = all_perms(n)
                .into_iter()
                .filter(|w| bounds.windows(2).all(|b| (b[0] + 1..b[1]).all(|i| w.apply(i) < w.apply(i + 1))))
                .collect();
            let mut fast = shuffles(&parts).members;
            brute.sort();
            fast.sort();
            assert_eq!(brute, fast, "parts {parts:?}");
        }
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi(1, 1), Perm::simple(2, 1));
        assert_eq!(chi(2, 1).one_line(), vec![2, 3, 1]);
        assert_eq!(chi(2, 3).length(), 6);
    }

    #[test]
    fn reduced_decomposition_examples() {
        let sh = shuffles(&[2, 2]).members;
        let young = young_subgroup(&[2, 2]);
        assert!(is_reduced_decomposition(&sh, &young, &all_perms(4)));
        // wrong target
        let sh21 = shuffles(&[2, 1]).members;
        assert!(!is_reduced_decomposition(&sh21, &embed(&all_perms(1), 0, 2), &all_perms(3)));
        // (S_{2,1}, S_{1,1} x 1) and (S_{1,2}, 1 x S_{1,1}) both decompose S_{1,1,1}
        let s111 = shuffles(&[1, 1, 1]).members;
        let left = embed(&shuffles(&[1, 1]).members, 0, 1);
        let right = embed(&shuffles(&[1, 1]).members, 1, 0);
        assert!(is_reduced_decomposition(&shuffles(&[2, 1]).members, &left, &s111));
        assert!(is_reduced_decomposition(&shuffles(&[1, 2]).members, &right, &s111));
        // the order of the pair matters
        assert!(!is_reduced_decomposition(&left, &shuffles(&[2, 1]).members, &s111));
    }

    #[test]
    fn cross_inversions_counts_pairs() {
        assert_eq!(cross_inversions(&[2, 4], &[1, 3, 5]), 3);
    }
}
