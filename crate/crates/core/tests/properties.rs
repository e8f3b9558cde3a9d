use lrq::oracle::{naive_is_repeat, NaiveOracle};
use lrq::{build_index, llr_at, llr_table, load_index, save_index, sort_llr_desc, Repeat};
use proptest::prelude::*;

fn text(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop_oneof![Just(1u8), Just(2), Just(4), Just(26)].prop_flat_map(move |sigma| {
        proptest::collection::vec(0..sigma, 0..max_len)
            .prop_map(|v| v.into_iter().map(|c| b'a' + c).collect::<Vec<u8>>())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn suffix_array_matches_naive_sort(t in text(500)) {
        let idx = build_index(&t);
        let mut naive: Vec<usize> = (1..=t.len()).collect();
        naive.sort_by(|&a, &b| t[a - 1..].cmp(&t[b - 1..]));
        prop_assert_eq!(idx.suffix_array(), &naive[..]);
        for (j, &p) in idx.suffix_array().iter().enumerate() {
            prop_assert_eq!(idx.rank_of(p), j + 1);
        }
        for (p, &r) in idx.rank_array().iter().enumerate() {
            prop_assert_eq!(idx.suffix_array()[r - 1], p + 1);
        }
    }

    #[test]
    fn lcp_matches_naive_comparison(t in text(500)) {
        let idx = build_index(&t);
        let n = t.len();
        prop_assert_eq!(idx.lcp_array().len(), n + 1);
        prop_assert_eq!(idx.lcp_at(1), 0);
        prop_assert_eq!(idx.lcp_at(n + 1), 0);
        let sa = idx.suffix_array();
        for i in 2..=n {
            let (a, b) = (&t[sa[i - 2] - 1..], &t[sa[i - 1] - 1..]);
            let naive = a.iter().zip(b).take_while(|(x, y)| x == y).count();
            prop_assert_eq!(idx.lcp_at(i), naive);
        }
    }

    #[test]
    fn persistence_round_trip(t in proptest::collection::vec(any::<u8>(), 0..300)) {
        let idx = build_index(&t);
        let mut buf = Vec::new();
        save_index(&idx, &mut buf).unwrap();
        prop_assert_eq!(load_index(&mut buf.as_slice()).unwrap(), idx);
    }

    #[test]
    fn llr_satisfies_definition(t in text(200)) {
        let idx = build_index(&t);
        let n = t.len();
        for i in 1..=n {
            let r = llr_at(&idx, i).unwrap();
            if let Some(start) = r.start() {
                prop_assert_eq!(start, i);
                let len = r.length();
                prop_assert!(naive_is_repeat(&t, i, len).unwrap());
                prop_assert!(i + len - 1 == n || !naive_is_repeat(&t, i, len + 1).unwrap());
            } else {
                // A singleton: the one-byte substring is unique.
                prop_assert!(!naive_is_repeat(&t, i, 1).unwrap());
            }
        }
    }

    #[test]
    fn sort_is_stable_descending_permutation(t in text(300)) {
        let idx = build_index(&t);
        let table = llr_table(&idx);
        let sorted = sort_llr_desc(table.clone());
        let pairs: Vec<_> = sorted.pairs().collect();
        for w in pairs.windows(2) {
            prop_assert!(w[0].1 > w[1].1 || (w[0].1 == w[1].1 && w[0].0 < w[1].0));
        }
        let mut back = pairs.clone();
        back.sort();
        prop_assert_eq!(back, table.pairs().collect::<Vec<_>>());
    }

    #[test]
    fn oracle_answers_are_maximal_repeats(t in text(60)) {
        let o = NaiveOracle::new(&t);
        for k in 1..=t.len() {
            let lrs = o.lr_at(k);
            let len = lrs.first().map_or(0, Repeat::length);
            for r in &lrs {
                prop_assert!(r.covers(k) && r.length() == len);
                prop_assert!(naive_is_repeat(&t, r.start().unwrap(), len).unwrap());
            }
            // No repeat one longer covers k.
            let longer = len + 1;
            for i in k.saturating_sub(longer - 1).max(1)..=k {
                if i + longer - 1 <= t.len() {
                    prop_assert!(!naive_is_repeat(&t, i, longer).unwrap());
                }
            }
        }
    }
}
