//! Induced sorting (SA-IS) suffix array construction, O(n) time.
//!
//! Works on an integer alphabet `0..alphabet` where the input ends with a
//! unique smallest symbol `0`.

const EMPTY: usize = usize::MAX;

/// 0-based suffix array of `text`.
pub(crate) fn suffix_array(text: &[u8]) -> Vec<usize> {
    if text.is_empty() {
        return Vec::new();
    }
    let s: Vec<usize> = text
        .iter()
        .map(|&b| b as usize + 1)
        .chain(std::iter::once(0))
        .collect();
    let mut sa = vec![EMPTY; s.len()];
    sais(&s, 257, &mut sa);
    // sa[0] is the sentinel suffix.
    sa.remove(0);
    sa
}

fn bucket_heads(counts: &[usize]) -> Vec<usize> {
    let mut sum = 0;
    counts
        .iter()
        .map(|&c| {
            let head = sum;
            sum += c;
            head
        })
        .collect()
}

fn bucket_tails(counts: &[usize]) -> Vec<usize> {
    let mut sum = 0;
    counts
        .iter()
        .map(|&c| {
            sum += c;
            sum
        })
        .collect()
}

#[inline]
fn is_lms(stype: &[bool], i: usize) -> bool {
    i > 0 && stype[i] && !stype[i - 1]
}

fn induce(s: &[usize], stype: &[bool], counts: &[usize], sa: &mut [usize]) {
    let n = s.len();
    let mut heads = bucket_heads(counts);
    for i in 0..n {
        let j = sa[i];
        if j != EMPTY && j > 0 && !stype[j - 1] {
            let c = s[j - 1];
            sa[heads[c]] = j - 1;
            heads[c] += 1;
        }
    }
    let mut tails = bucket_tails(counts);
    for i in (0..n).rev() {
        let j = sa[i];
        if j != EMPTY && j > 0 && stype[j - 1] {
            let c = s[j - 1];
            tails[c] -= 1;
            sa[tails[c]] = j - 1;
        }
    }
}

fn lms_substrings_equal(s: &[usize], stype: &[bool], a: usize, b: usize) -> bool {
    let n = s.len();
    if a == n - 1 || b == n - 1 {
        return false;
    }
    let mut d = 0;
    loop {
        let a_end = d > 0 && is_lms(stype, a + d);
        let b_end = d > 0 && is_lms(stype, b + d);
        if a_end && b_end {
            return true;
        }
        if a_end != b_end || s[a + d] != s[b + d] || stype[a + d] != stype[b + d] {
            return false;
        }
        d += 1;
    }
}

fn sais(s: &[usize], alphabet: usize, sa: &mut [usize]) {
    let n = s.len();
    debug_assert_eq!(sa.len(), n);
    if n == 1 {
        sa[0] = 0;
        return;
    }

    let mut stype = vec![false; n];
    stype[n - 1] = true;
    for i in (0..n - 1).rev() {
        stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
    }
    let mut counts = vec![0usize; alphabet];
    for &c in s {
        counts[c] += 1;
    }

    // Approximate placement of LMS suffixes, then induce to sort LMS substrings.
    sa.fill(EMPTY);
    let mut tails = bucket_tails(&counts);
    for i in (1..n).rev() {
        if is_lms(&stype, i) {
            tails[s[i]] -= 1;
            sa[tails[s[i]]] = i;
        }
    }
    induce(s, &stype, &counts, sa);

    let sorted_lms: Vec<usize> = sa
        .iter()
        .copied()
        .filter(|&p| p != EMPTY && is_lms(&stype, p))
        .collect();
    let m = sorted_lms.len();

    // Name LMS substrings; names indexed by position / 2 are collision free
    // because LMS positions are at least two apart.
    let mut names = vec![EMPTY; n / 2 + 1];
    let mut name = 0usize;
    let mut prev: Option<usize> = None;
    for &p in &sorted_lms {
        match prev {
            Some(q) if lms_substrings_equal(s, &stype, q, p) => {}
            _ => name += 1,
        }
        prev = Some(p);
        names[p / 2] = name - 1;
    }
    let lms_positions: Vec<usize> = (1..n).filter(|&i| is_lms(&stype, i)).collect();
    let reduced: Vec<usize> = lms_positions.iter().map(|&p| names[p / 2]).collect();

    let mut reduced_sa = vec![EMPTY; m];
    if name < m {
        sais(&reduced, name, &mut reduced_sa);
    } else {
        for (i, &r) in reduced.iter().enumerate() {
            reduced_sa[r] = i;
        }
    }

    sa.fill(EMPTY);
    let mut tails = bucket_tails(&counts);
    for &r in reduced_sa.iter().rev() {
        let p = lms_positions[r];
        tails[s[p]] -= 1;
        sa[tails[s[p]]] = p;
    }
    induce(s, &stype, &counts, sa);
}
