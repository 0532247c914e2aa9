mod common;

use powercat_core::objects::*;
use powercat_core::patterns::{enumerate_class, ClassSpec, EnumerationLimits};
use proptest::prelude::*;

fn paths(kind: PathKind, n: usize) -> Vec<Path> {
    enumerate_class(&ClassSpec::Paths(kind), n, &EnumerationLimits::default())
        .unwrap()
        .into_iter()
        .map(|o| match o {
            DomainObject::Path(p) => p,
            _ => unreachable!(),
        })
        .collect()
}

#[test]
fn dyck_paths_are_steady() {
    for n in 1..=8 {
        for w in common::dyck_words(n) {
            Path::from_word(&w, PathKind::Dyck).unwrap();
            Path::from_word(&w, PathKind::Steady).unwrap();
        }
        assert_eq!(paths(PathKind::Dyck, n).len(), common::dyck_words(n).len());
    }
}

#[test]
fn marked_kinds_degrade_to_unmarked_ones() {
    for n in 1..=6 {
        for p in paths(PathKind::ValleyMarkedSteady, n) {
            if p.w_count() == 0 {
                p.with_kind(PathKind::ValleyMarkedDyck).validate().unwrap();
            }
            if p.total_mark() == 0 {
                p.with_kind(PathKind::Steady).validate().unwrap();
            }
        }
    }
}

#[test]
fn steady_paths_end_on_the_axis() {
    for n in 1..=7 {
        for p in paths(PathKind::Steady, n) {
            let downs = p.steps().iter().filter(|&&s| s == Step::D).count();
            assert_eq!(downs, n + p.w_count());
            assert_eq!(*p.points().last().unwrap(), (2 * n as i64, 0));
        }
    }
}

/// Steady paths rebuilt from their up-step starts: the `k`-th up step starts
/// on the antidiagonal `i + j = 2(k-1)`, consecutive starts are joined by
/// runs of `D` or `W`, and the invalid candidates are discarded by
/// validation. This must reproduce the enumeration exactly.
#[test]
fn steady_paths_from_up_step_positions() {
    fn candidates(n: usize) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64]];
        for k in 1..n {
            out = out
                .into_iter()
                .flat_map(|d| (0..=k as i64).map(move |x| [d.clone(), vec![x]].concat()))
                .collect();
        }
        out
    }
    for n in 1..=6 {
        let mut built: Vec<String> = Vec::new();
        for d in candidates(n) {
            let mut w = String::new();
            for k in 0..n {
                w.push('U');
                let next = if k + 1 < n { d[k + 1] } else { n as i64 };
                let diff = next - d[k];
                let run = if diff >= 0 { "D" } else { "W" };
                w.push_str(&run.repeat(diff.unsigned_abs() as usize));
            }
            if Path::from_word(&w, PathKind::Steady).is_ok() {
                built.push(w);
            }
        }
        built.sort();
        let listed: Vec<String> = paths(PathKind::Steady, n).iter().map(|p| p.word()).collect();
        assert_eq!(built, listed, "n = {}", n);
    }
}

#[test]
fn invalid_objects_report_every_violation() {
    let err = Path::from_word("UDWUDD", PathKind::Steady).unwrap_err();
    assert!(matches!(err, ObjectError::Invalid(ref v) if v.contains(Invariant::ForbiddenFactor)));
    let p = Path::parse("UUDUDD;marks=2", PathKind::ValleyMarkedDyck).unwrap();
    assert!(p.validate().unwrap_err().contains(Invariant::M1));
    assert!("0(2(1))".parse::<IncreasingOrderedTree>().is_err());
    assert!("2,2,1".parse::<Permutation>().is_err());
}

#[test]
fn trees_size_and_leaves() {
    let t: IncreasingOrderedTree = "0(1(3)2)".parse().unwrap();
    assert_eq!(t.size(), 3);
    assert_eq!(t.root_degree(), 2);
    assert_eq!(t.leaves(), vec![3, 2]);
    assert!(!t.has_increasing_leaves());
}

fn arb_invseq() -> impl Strategy<Value = Vec<u32>> {
    (1..=15usize).prop_flat_map(|n| (0..n).map(|i| 0..=i as u32).collect::<Vec<_>>())
}

proptest! {
    #[test]
    fn invseq_text_round_trips(e in arb_invseq()) {
        let s = InversionSequence::new(e.clone()).unwrap();
        prop_assert_eq!(s.to_string(), common::join(&e));
        prop_assert_eq!(s.to_string().parse::<InversionSequence>().unwrap(), s);
    }

    #[test]
    fn perm_text_round_trips(v in (1..=12usize).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())) {
        let p = Permutation::new(v).unwrap();
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn marked_path_text_round_trips(i in 0usize..1000) {
        let all = paths(PathKind::ValleyMarkedDyck, 5);
        let p = &all[i % all.len()];
        prop_assert_eq!(&Path::parse(&p.to_string(), PathKind::ValleyMarkedDyck).unwrap(), p);
    }
}
