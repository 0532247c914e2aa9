mod common;

use std::collections::BTreeSet;

use powercat_core::objects::{DomainObject, InversionSequence, Permutation};
use powercat_core::patterns::*;
use proptest::prelude::*;

fn seq(v: &[u32]) -> InversionSequence {
    InversionSequence::new(v.to_vec()).unwrap()
}

fn triple(t: [&str; 3]) -> RelationTriple {
    t.join(",").parse().unwrap()
}

fn words(list: &str) -> Vec<WordPattern> {
    parse_word_list(list).unwrap()
}

#[test]
fn every_triple_matches_the_naive_scan() {
    let seqs: Vec<Vec<u32>> = (1..=6).flat_map(common::all_invseqs).collect();
    for a in common::RELATIONS {
        for b in common::RELATIONS {
            for c in common::RELATIONS {
                let t = triple([a, b, c]);
                for e in &seqs {
                    assert_eq!(
                        avoids_triple(&seq(e), &t),
                        common::avoids_triple(e, [a, b, c]),
                        "{:?} with {}",
                        e,
                        t
                    );
                }
            }
        }
    }
}

#[test]
fn word_and_vincular_oracles_match_the_naive_scan() {
    let ws = ["000", "100", "101", "110", "201", "210", "012", "102"];
    for n in 1..=7 {
        for e in common::all_invseqs(n) {
            for w in ws {
                assert_eq!(avoids_word(&seq(&e), &w.parse().unwrap()), common::avoids_words(&e, &[w]));
            }
        }
    }
    let pats = ["1-23-4", "1-34-2", "1-23", "2-14-3", "23-1-4", "123", "2143"];
    for n in 1..=7 {
        for p in common::all_perms(n) {
            let perm = Permutation::new(p.clone()).unwrap();
            for s in pats {
                assert_eq!(
                    avoids_vincular(&perm, &s.parse().unwrap()),
                    common::avoids_vincular(&p, s),
                    "{:?} vs {}",
                    p,
                    s
                );
            }
        }
    }
}

/// Each triple family against its word-pattern description and its
/// structural criterion, over all inversion sequences of length up to 9.
#[test]
fn characterizations_agree() {
    type Criterion = fn(&InversionSequence) -> bool;
    let cases: [(&str, &str, Option<Criterion>); 5] = [
        ("geq,dash,geq", "000,100,101,110,201,210", Some(catalan_criterion)),
        ("geq,geq,geq", "000,100,110,210", Some(ltr_bottom_criterion)),
        ("geq,geq,gt", "100,110,210", Some(baxter_criterion)),
        ("geq,gt,dash", "110,210", Some(semi_baxter_criterion)),
        ("eq,gt,gt", "110", None),
    ];
    let cases: Vec<_> = cases
        .iter()
        .map(|(t, w, c)| (t.parse::<RelationTriple>().unwrap(), words(w), *c))
        .collect();
    for n in 1..=9 {
        for e in common::all_invseqs(n) {
            let e = seq(&e);
            for (t, ws, criterion) in &cases {
                let by_triple = avoids_triple(&e, t);
                let by_words = ws.iter().all(|w| avoids_word(&e, w));
                assert_eq!(by_triple, by_words, "{} for {}", e, t);
                if let Some(c) = criterion {
                    assert_eq!(by_triple, c(&e), "criterion for {} at {}", t, e);
                }
            }
        }
    }
}

#[test]
fn ascent_criterion_matches_1_23_4() {
    let pat: VincularPattern = "1-23-4".parse().unwrap();
    for n in 1..=8 {
        for p in common::all_perms(n) {
            let p = Permutation::new(p).unwrap();
            assert_eq!(av_1_23_4_criterion(&p), avoids_vincular(&p, &pat), "{}", p);
        }
    }
}

#[test]
fn enumeration_matches_filtered_brute_force() {
    let limits = EnumerationLimits::default();
    for t in [["geq", "dash", "geq"], ["eq", "gt", "gt"], ["lt", "neq", "dash"]] {
        let spec = ClassSpec::InvSeqTriple(triple(t));
        for n in 1..=7 {
            let listed: Vec<String> = enumerate_class(&spec, n, &limits)
                .unwrap()
                .iter()
                .map(|o| o.to_string())
                .collect();
            let expected: Vec<String> = common::all_invseqs(n)
                .into_iter()
                .filter(|e| common::avoids_triple(e, t))
                .map(|e| common::join(&e))
                .collect();
            assert_eq!(listed, expected, "{:?} at {}", t, n);
        }
    }
    let spec = ClassSpec::PermVincular(parse_vincular_list("1-23,2-14-3").unwrap());
    for n in 1..=7 {
        let listed: Vec<String> = enumerate_class(&spec, n, &limits)
            .unwrap()
            .iter()
            .map(|o| o.to_string())
            .collect();
        let expected: Vec<String> = common::all_perms(n)
            .into_iter()
            .filter(|p| common::avoids_vincular(p, "1-23") && common::avoids_vincular(p, "2-14-3"))
            .map(|p| common::join(&p))
            .collect();
        assert_eq!(listed, expected);
    }
}

#[test]
fn enumeration_is_sorted_and_duplicate_free() {
    let limits = EnumerationLimits::default();
    let specs = [
        ClassSpec::InvSeqTriple("geq,geq,gt".parse().unwrap()),
        ClassSpec::PermVincular(parse_vincular_list("1-34-2").unwrap()),
        ClassSpec::Paths(powercat_core::PathKind::Steady),
        ClassSpec::Paths(powercat_core::PathKind::ValleyMarkedDyck),
        ClassSpec::Trees,
    ];
    for spec in &specs {
        for n in 1..=6 {
            let texts: Vec<String> = enumerate_class(spec, n, &limits)
                .unwrap()
                .iter()
                .map(DomainObject::to_string)
                .collect();
            let set: BTreeSet<&String> = texts.iter().collect();
            assert_eq!(set.len(), texts.len(), "{} at {}", spec, n);
            let mut sorted = texts.clone();
            sorted.sort();
            assert_eq!(texts, sorted, "{} at {}", spec, n);
        }
    }
}

#[test]
fn family_counts_match_known_terms() {
    let limits = EnumerationLimits::default();
    let cases: [(&str, &[u64]); 5] = [
        ("geq,dash,geq", &[1, 2, 5, 14, 42, 132, 429, 1430, 4862]),
        ("geq,geq,geq", &[1, 2, 5, 15, 51, 191, 772, 3320]),
        ("geq,geq,gt", &[1, 2, 6, 22, 92, 422, 2074]),
        ("geq,gt,dash", &[1, 2, 6, 23, 104, 530, 2958]),
        ("eq,gt,gt", &[1, 2, 6, 23, 105, 549, 3207]),
    ];
    for (t, terms) in cases {
        let spec = ClassSpec::InvSeqTriple(t.parse().unwrap());
        let counts: Vec<u64> = (1..=terms.len())
            .map(|n| count_class(&spec, n, &limits).unwrap())
            .collect();
        assert_eq!(counts, terms, "{}", t);
    }
}

#[test]
fn known_correspondences_are_equinumerous() {
    let limits = EnumerationLimits::default();
    let list = classical_correspondences();
    assert_eq!(list.len(), 8);
    for c in &list {
        for perms in &c.permutations {
            for row in equinumerosity_check(&c.inversion_sequences, perms, 7, &limits).unwrap() {
                assert!(row.equal(), "{} vs {}: {:?}", c.inversion_sequences, perms, row);
            }
        }
    }
    let pcat = ClassSpec::InvSeqTriple("eq,gt,gt".parse().unwrap());
    let av = ClassSpec::PermVincular(parse_vincular_list("1-23-4").unwrap());
    assert!(equinumerosity_check(&pcat, &av, 8, &limits).unwrap().iter().all(|r| r.equal()));
}

#[test]
fn permutation_statistics_examples() {
    let s = perm_statistics(&"3,2,1".parse().unwrap());
    assert_eq!(s.rtl_minima, 1);
    let s = perm_statistics(&"2,4,1,3".parse().unwrap());
    assert_eq!(s.rtl_minima, 2);
    let s = perm_statistics(&Permutation::identity(6));
    assert_eq!((s.rtl_minima, s.ltr_maxima, s.ltr_minima, s.rtl_maxima), (6, 6, 1, 1));
}

#[test]
fn limits_are_reported() {
    let spec = ClassSpec::InvSeqTriple("geq,dash,geq".parse().unwrap());
    let err = enumerate_class(&spec, 11, &EnumerationLimits::default()).unwrap_err();
    assert!(matches!(err, EnumerationError::LimitExceeded { n: 11, .. }));
}

fn arb_invseq(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    (1..=max_len).prop_flat_map(|n| (0..n).map(|i| 0..=i as u32).collect::<Vec<_>>())
}

fn arb_perm(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    (1..=max_len).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
}

proptest! {
    #[test]
    fn triple_avoidance_on_long_sequences(e in arb_invseq(14), a in 0..7usize, b in 0..7usize, c in 0..7usize) {
        let t = [common::RELATIONS[a], common::RELATIONS[b], common::RELATIONS[c]];
        prop_assert_eq!(avoids_triple(&seq(&e), &triple(t)), common::avoids_triple(&e, t));
    }

    #[test]
    fn vincular_avoidance_on_longer_perms(p in arb_perm(11)) {
        let perm = Permutation::new(p.clone()).unwrap();
        for s in ["1-23-4", "23-1-4", "1-34-2"] {
            prop_assert_eq!(avoids_vincular(&perm, &s.parse().unwrap()), common::avoids_vincular(&p, s));
        }
    }

    #[test]
    fn statistics_follow_definitions(p in arb_perm(12)) {
        let s = perm_statistics(&Permutation::new(p.clone()).unwrap());
        let n = p.len();
        let ltr_min = (0..n).filter(|&i| p[..i].iter().all(|&x| x > p[i])).count();
        let ltr_max = (0..n).filter(|&i| p[..i].iter().all(|&x| x < p[i])).count();
        let rtl_min = (0..n).filter(|&i| p[i + 1..].iter().all(|&x| x > p[i])).count();
        let rtl_max = (0..n).filter(|&i| p[i + 1..].iter().all(|&x| x < p[i])).count();
        prop_assert_eq!((s.ltr_minima, s.ltr_maxima, s.rtl_minima, s.rtl_maxima), (ltr_min, ltr_max, rtl_min, rtl_max));
    }

    #[test]
    fn pattern_text_round_trips(p in arb_perm(6), cuts in proptest::collection::vec(any::<bool>(), 5)) {
        let mut text = String::new();
        for (i, x) in p.iter().enumerate() {
            if i > 0 && cuts[i - 1] {
                text.push('-');
            }
            text.push_str(&x.to_string());
        }
        let v: VincularPattern = text.parse().unwrap();
        prop_assert_eq!(v.to_string(), text);
    }
}
