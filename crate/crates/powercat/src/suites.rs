//! The verification suites. Each `*_checks` function is one group of
//! cross-checks; the suites are fixed concatenations of the groups.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use powercat_core::bijections::{
    catalan_invseq_to_perm, perm_to_catalan_invseq, perm_to_steady, phi, phi_star, steady_to_perm, theta,
    theta_star,
};
use powercat_core::gentree::{label_distribution, level_counts, p1234_to_steady, rules_isomorphic_check, Label};
use powercat_core::growth::{growth_consistency, Family};
use powercat_core::objects::{DomainObject, InversionSequence, Path, Permutation};
use powercat_core::patterns::{
    av_1_23_4_criterion, avoids_triple, avoids_vincular, avoids_word, baxter_criterion, catalan_criterion,
    classical_correspondences, count_class, enumerate_class, equinumerosity_check, ltr_bottom_criterion,
    parse_vincular_list, parse_word_list, semi_baxter_criterion, ClassSpec, EnumerationLimits,
};
use powercat_core::series::{
    callan_triangle, check_functional_equation, e3_sequence, kernel_a11, kernel_w, reference_sequence,
    satisfies_a108307_recurrence, w_residual,
};
use powercat_core::{BuiltinRule, PathKind};

use crate::classes::parse_class;
use crate::conjecture::conjecture_checks;
use crate::report::Check;

pub const SUITES: [&str; 5] = ["characterizations", "growths", "bijections", "series", "all"];

/// Known initial terms for the five inversion-sequence families.
pub const FAMILY_PREFIXES: [(&str, &[u64]); 5] = [
    ("geq,dash,geq", &[1, 2, 5, 14, 42, 132, 429, 1430, 4862]),
    ("geq,geq,geq", &[1, 2, 5, 15, 51, 191, 772, 3320]),
    ("geq,geq,gt", &[1, 2, 6, 22, 92, 422, 2074]),
    ("geq,gt,dash", &[1, 2, 6, 23, 104, 530, 2958]),
    ("eq,gt,gt", &[1, 2, 6, 23, 105, 549, 3207]),
];

fn limits() -> EnumerationLimits {
    EnumerationLimits::default()
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn triple(s: &str) -> ClassSpec {
    ClassSpec::InvSeqTriple(s.parse().unwrap())
}

fn invseqs(spec: &ClassSpec, n: usize) -> Result<Vec<InversionSequence>, String> {
    Ok(enumerate_class(spec, n, &limits())
        .map_err(err)?
        .into_iter()
        .filter_map(|o| match o {
            DomainObject::InversionSequence(e) => Some(e),
            _ => None,
        })
        .collect())
}

fn perms(spec: &ClassSpec, n: usize) -> Result<Vec<Permutation>, String> {
    Ok(enumerate_class(spec, n, &limits())
        .map_err(err)?
        .into_iter()
        .filter_map(|o| match o {
            DomainObject::Permutation(p) => Some(p),
            _ => None,
        })
        .collect())
}

fn paths(kind: PathKind, n: usize) -> Result<Vec<Path>, String> {
    Ok(enumerate_class(&ClassSpec::Paths(kind), n, &limits())
        .map_err(err)?
        .into_iter()
        .filter_map(|o| match o {
            DomainObject::Path(p) => Some(p),
            _ => None,
        })
        .collect())
}

/// Every inversion sequence (the empty list of word patterns).
fn all_invseqs() -> ClassSpec {
    ClassSpec::InvSeqWords(Vec::new())
}

fn all_perms() -> ClassSpec {
    ClassSpec::PermClassical(Vec::new())
}

/// Family whose growth realizes `rule`; used for the rule/object counts.
pub fn family_of(rule: BuiltinRule) -> Family {
    match rule {
        BuiltinRule::Cat => Family::Cat,
        BuiltinRule::Cat2 => Family::Cat2,
        BuiltinRule::IGeq3 => Family::IGeq3,
        BuiltinRule::Bax => Family::Bax,
        BuiltinRule::Semi => Family::Semi,
        BuiltinRule::PCat => Family::PCatInvSeq,
        BuiltinRule::P1234 => Family::P1234,
        BuiltinRule::Steady => Family::Steady,
    }
}

pub fn reference_of(rule: BuiltinRule) -> &'static str {
    match rule {
        BuiltinRule::Cat | BuiltinRule::Cat2 => "catalan",
        BuiltinRule::IGeq3 => "a108307",
        BuiltinRule::Bax => "baxter",
        BuiltinRule::Semi => "semibaxter",
        BuiltinRule::PCat | BuiltinRule::P1234 | BuiltinRule::Steady => "pcat",
    }
}

// ---------------------------------------------------------------------------

/// Exhaustive family sizes against the known initial terms.
pub fn family_count_checks() -> Vec<Check> {
    FAMILY_PREFIXES
        .iter()
        .map(|&(t, terms)| {
            Check::new(format!("count I({})", t), format!("n<={}", terms.len()), move || {
                for (i, &want) in terms.iter().enumerate() {
                    let got = count_class(&triple(t), i + 1, &limits()).map_err(err)?;
                    if got != want {
                        return Err(format!("n={}: counted {}, expected {}", i + 1, got, want));
                    }
                }
                Ok(())
            })
        })
        .collect()
}

/// Triple, word-pattern and structural descriptions of each family agree.
pub fn characterization_checks() -> Vec<Check> {
    type Criterion = fn(&InversionSequence) -> bool;
    let cases: [(&str, &str, Option<Criterion>); 5] = [
        ("geq,dash,geq", "000,100,101,110,201,210", Some(catalan_criterion)),
        ("geq,geq,geq", "000,100,110,210", Some(ltr_bottom_criterion)),
        ("geq,geq,gt", "100,110,210", Some(baxter_criterion)),
        ("geq,gt,dash", "110,210", Some(semi_baxter_criterion)),
        ("eq,gt,gt", "110", None),
    ];
    let mut out: Vec<Check> = cases
        .iter()
        .map(|&(t, words, criterion)| {
            Check::new(format!("I({}) = I(avoid:{})", t, words), "n<=9", move || {
                let rt = t.parse().unwrap();
                let ws = parse_word_list(words).unwrap();
                for n in 1..=9 {
                    for e in invseqs(&all_invseqs(), n)? {
                        let a = avoids_triple(&e, &rt);
                        if a != ws.iter().all(|w| avoids_word(&e, w)) {
                            return Err(format!("{}: triple {}, words {}", e, a, !a));
                        }
                        if let Some(c) = criterion {
                            if c(&e) != a {
                                return Err(format!("{}: criterion {}, triple {}", e, !a, a));
                            }
                        }
                    }
                }
                Ok(())
            })
        })
        .collect();
    out.push(Check::new("AV(1-23-4) ascent criterion", "n<=8", || {
        let pat = "1-23-4".parse().unwrap();
        for n in 1..=8 {
            for p in perms(&all_perms(), n)? {
                if av_1_23_4_criterion(&p) != avoids_vincular(&p, &pat) {
                    return Err(p.to_string());
                }
            }
        }
        Ok(())
    }));
    for &(t, words, _) in &cases {
        out.push(Check::new(
            format!("family syntax {} = avoid:{}", t, words),
            "n<=9",
            move || {
                let a = parse_class(t).map_err(err)?;
                let b = parse_class(&format!("avoid:{}", words)).map_err(err)?;
                for n in 1..=9 {
                    let (x, y) = (
                        count_class(&a, n, &limits()).map_err(err)?,
                        count_class(&b, n, &limits()).map_err(err)?,
                    );
                    if x != y {
                        return Err(format!("n={}: {} vs {}", n, x, y));
                    }
                }
                Ok(())
            },
        ));
    }
    out
}

/// Known inversion-sequence / classical-permutation equinumerosities.
pub fn equinumerosity_checks() -> Vec<Check> {
    let mut out: Vec<Check> = classical_correspondences()
        .into_iter()
        .map(|c| {
            let name = format!(
                "{} ~ {}",
                c.inversion_sequences,
                c.permutations.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ~ ")
            );
            Check::new(name, "n<=7", move || {
                for p in &c.permutations {
                    for row in equinumerosity_check(&c.inversion_sequences, p, 7, &limits()).map_err(err)? {
                        if !row.equal() {
                            return Err(format!("n={}: {} vs {} for {}", row.n, row.left, row.right, p));
                        }
                    }
                }
                Ok(())
            })
        })
        .collect();
    out.push(Check::new("I(eq,gt,gt) ~ AV(1-23-4)", "n<=8", || {
        let av = ClassSpec::PermVincular(parse_vincular_list("1-23-4").unwrap());
        for row in equinumerosity_check(&triple("eq,gt,gt"), &av, 8, &limits()).map_err(err)? {
            if !row.equal() {
                return Err(format!("n={}: {} vs {}", row.n, row.left, row.right));
            }
        }
        Ok(())
    }));
    out
}

/// Rule level counts against the reference sequences, depth 10.
pub fn reference_checks() -> Vec<Check> {
    BuiltinRule::ALL
        .iter()
        .map(|&rule| {
            Check::new(format!("levels {} = {}", rule, reference_of(rule)), "depth<=10", move || {
                let got = level_counts(&rule, 10).map_err(err)?;
                let want = reference_sequence(reference_of(rule), 10).map_err(err)?;
                match got.iter().zip(&want).position(|(a, b)| a != b) {
                    None => Ok(()),
                    Some(i) => Err(format!("level {}: {} vs {}", i + 1, got[i], want[i])),
                }
            })
        })
        .collect()
}

/// Rule level counts against exhaustive object counts.
pub fn rule_object_checks() -> Vec<Check> {
    BuiltinRule::ALL
        .iter()
        .map(|&rule| {
            let family = family_of(rule);
            let depth = if family == Family::P1234 { 7 } else { 8 };
            Check::new(
                format!("levels {} = |{}|", rule, family.class()),
                format!("d<={}", depth),
                move || {
                    let counts = level_counts(&rule, depth).map_err(err)?;
                    for (i, c) in counts.iter().enumerate() {
                        let n = count_class(&family.class(), i + 1, &limits()).map_err(err)?;
                        if BigUint::from(n) != *c {
                            return Err(format!("d={}: rule {}, objects {}", i + 1, c, n));
                        }
                    }
                    Ok(())
                },
            )
        })
        .collect()
}

/// The powered Catalan triangle read four ways.
pub fn triangle_checks() -> Vec<Check> {
    vec![Check::new(
        "pcat labels = triangle = zeros = last descents = root degrees",
        "n<=8",
        || {
            let tri = callan_triangle(8);
            let dist = label_distribution(&BuiltinRule::PCat, 8).map_err(err)?;
            for n in 1..=8 {
                let mut zeros = BTreeMap::<usize, u64>::new();
                for e in invseqs(&triple("eq,gt,gt"), n)? {
                    *zeros.entry(e.zeros()).or_default() += 1;
                }
                let mut descents = BTreeMap::<usize, u64>::new();
                for p in paths(PathKind::ValleyMarkedDyck, n)? {
                    *descents.entry(p.last_descent_length()).or_default() += 1;
                }
                let mut degrees = BTreeMap::<usize, u64>::new();
                for o in enumerate_class(&ClassSpec::Trees, n, &limits()).map_err(err)? {
                    if let DomainObject::Tree(t) = o {
                        *degrees.entry(t.root_degree()).or_default() += 1;
                    }
                }
                for k in 0..=n {
                    let c = tri.get(n, k);
                    let row = [
                        dist[n - 1].get(&Label::One(k as u32)).cloned().unwrap_or_default(),
                        BigUint::from(zeros.get(&k).copied().unwrap_or(0)),
                        BigUint::from(descents.get(&k).copied().unwrap_or(0)),
                        BigUint::from(degrees.get(&k).copied().unwrap_or(0)),
                    ];
                    if row.iter().any(|x| *x != c) {
                        return Err(format!(
                            "n={} k={}: triangle {}, labels {}, zeros {}, descents {}, degrees {}",
                            n, k, c, row[0], row[1], row[2], row[3]
                        ));
                    }
                }
            }
            Ok(())
        },
    )]
}

pub fn growth_checks() -> Vec<Check> {
    Family::ALL
        .iter()
        .map(|&family| {
            Check::new(format!("growth {}", family), "n<=7", move || {
                let r = growth_consistency(family, 7, &limits()).map_err(err)?;
                match r.violations.first() {
                    None => Ok(()),
                    Some(v) => Err(format!(
                        "{:?} at {}: {} ({} violations)",
                        v.kind,
                        v.object,
                        v.detail,
                        r.violations.len()
                    )),
                }
            })
        })
        .collect()
}

pub fn isomorphism_checks() -> Vec<Check> {
    vec![Check::new("p1234 tree ~ steady tree", "depth<=10", || {
        let r = rules_isomorphic_check(&BuiltinRule::P1234, &BuiltinRule::Steady, p1234_to_steady, 10)
            .map_err(err)?;
        match r.divergence {
            None => Ok(()),
            Some(d) => Err(format!(
                "level {} label {}: {} vs {}",
                d.level, d.label, d.left_count, d.right_count
            )),
        }
    })]
}

pub fn bijection_checks() -> Vec<Check> {
    vec![
        Check::new("phi*/theta* bijection and statistics", "n<=7", || {
            for n in 1..=7 {
                let mut image = BTreeSet::new();
                for p in paths(PathKind::Steady, n)? {
                    let q = phi_star(&p).map_err(err)?;
                    let (s, t) = (p.statistics(), q.statistics());
                    if q.validate().is_err()
                        || t.total_mark != s.w_count as u64
                        || t.diagonal_steps != s.diagonal_steps
                        || t.returns_to_mark != s.returns_to_axis
                    {
                        return Err(format!("{} -> {}", p, q));
                    }
                    if theta_star(&q).map_err(err)? != p {
                        return Err(format!("theta*(phi*({})) != itself", p));
                    }
                    image.insert(q);
                }
                let targets: BTreeSet<Path> = paths(PathKind::ValleyMarkedDyck, n)?.into_iter().collect();
                if image != targets {
                    let missing = targets.difference(&image).next();
                    return Err(format!("n={}: image differs, e.g. {:?}", n, missing.map(|p| p.to_string())));
                }
                for q in &targets {
                    if &phi_star(&theta_star(q).map_err(err)?).map_err(err)? != q {
                        return Err(format!("phi*(theta*({})) != itself", q));
                    }
                }
            }
            Ok(())
        }),
        Check::new("phi/theta single steps", "n<=6", || {
            for n in 1..=6 {
                for p in paths(PathKind::ValleyMarkedSteady, n)? {
                    let s = p.statistics();
                    if p.w_count() > 0 {
                        let q = phi(&p).map_err(err)?;
                        let t = q.statistics();
                        if q.validate().is_err()
                            || t.total_mark + t.w_count as u64 != s.total_mark + s.w_count as u64
                            || t.w_count + 1 != s.w_count
                            || t.diagonal_steps != s.diagonal_steps
                            || t.returns_to_mark != s.returns_to_mark
                            || theta(&q).map_err(err)? != p
                        {
                            return Err(format!("phi at {} -> {}", p, q));
                        }
                    }
                    if p.total_mark() > 0 {
                        let q = theta(&p).map_err(err)?;
                        let t = q.statistics();
                        if q.validate().is_err()
                            || t.total_mark + t.w_count as u64 != s.total_mark + s.w_count as u64
                            || t.diagonal_steps != s.diagonal_steps
                            || t.returns_to_mark != s.returns_to_mark
                            || phi(&q).map_err(err)? != p
                        {
                            return Err(format!("theta at {} -> {}", p, q));
                        }
                    }
                }
            }
            Ok(())
        }),
        Check::new("steady paths -> AV(1-34-2)", "n<=8", || {
            let pcat = reference_sequence("pcat", 8).map_err(err)?;
            for n in 1..=8 {
                let target: BTreeSet<Permutation> =
                    perms(&ClassSpec::PermVincular(parse_vincular_list("1-34-2").unwrap()), n)?
                        .into_iter()
                        .collect();
                let mut image = BTreeSet::new();
                for p in paths(PathKind::Steady, n)? {
                    let q = steady_to_perm(&p).map_err(err)?;
                    if perm_to_steady(&q).map_err(err)? != p || !image.insert(q) {
                        return Err(p.to_string());
                    }
                }
                if image != target || BigUint::from(image.len()) != pcat[n - 1] {
                    return Err(format!("n={}: image {} vs class {}", n, image.len(), target.len()));
                }
            }
            Ok(())
        }),
        Check::new("I(geq,dash,geq) -> AV(1-23,2-14-3)", "n<=9", || {
            let catalan = reference_sequence("catalan", 9).map_err(err)?;
            for n in 1..=9 {
                let target: BTreeSet<Permutation> =
                    perms(&ClassSpec::PermVincular(parse_vincular_list("1-23,2-14-3").unwrap()), n)?
                        .into_iter()
                        .collect();
                let mut image = BTreeSet::new();
                for e in invseqs(&triple("geq,dash,geq"), n)? {
                    let p = catalan_invseq_to_perm(&e).map_err(err)?;
                    if perm_to_catalan_invseq(&p).map_err(err)? != e || !image.insert(p) {
                        return Err(e.to_string());
                    }
                }
                if image != target || BigUint::from(image.len()) != catalan[n - 1] {
                    return Err(format!("n={}: image {} vs class {}", n, image.len(), target.len()));
                }
            }
            Ok(())
        }),
    ]
}

pub fn series_checks() -> Vec<Check> {
    vec![
        Check::new("kernel A(1,1) = E3 = |I(geq,geq,geq)|", "n<=9", || {
            let a11 = kernel_a11(9).map_err(err)?;
            let e3 = e3_sequence(9);
            if !satisfies_a108307_recurrence(&e3) {
                return Err("E3 fails its recurrence".into());
            }
            for n in 1..=9 {
                let brute = count_class(&triple("geq,geq,geq"), n, &limits()).map_err(err)?;
                if a11[n - 1] != brute.into() || e3[n] != BigUint::from(brute) {
                    return Err(format!("n={}: kernel {}, recurrence {}, brute {}", n, a11[n - 1], e3[n], brute));
                }
            }
            Ok(())
        }),
        Check::new("functional equation residual", "order 8", || {
            check_functional_equation(8).map_err(err)
        }),
        Check::new("W fixed-point residual", "order 8", || {
            let w = kernel_w(8).map_err(err)?;
            let r = w_residual(&w);
            match r.coeffs().iter().position(|c| !c.is_zero()) {
                None => Ok(()),
                Some(i) => Err(format!("x^{}: {}", i, r.coeff(i))),
            }
        }),
        Check::new("pcat labels = triangle", "n<=12", || {
            let tri = callan_triangle(12);
            let dist = label_distribution(&BuiltinRule::PCat, 12).map_err(err)?;
            for n in 1..=12 {
                for k in 0..=n {
                    let got = dist[n - 1].get(&Label::One(k as u32)).cloned().unwrap_or_default();
                    if got != tri.get(n, k) {
                        return Err(format!("n={} k={}: {} vs {}", n, k, got, tri.get(n, k)));
                    }
                }
            }
            Ok(())
        }),
    ]
}

/// Checks of the named suite; `None` for an unknown name.
pub fn suite_checks(name: &str) -> Option<Vec<Check>> {
    let groups: Vec<fn() -> Vec<Check>> = match name {
        "characterizations" => vec![family_count_checks, characterization_checks, equinumerosity_checks],
        "growths" => vec![
            reference_checks,
            rule_object_checks,
            triangle_checks,
            growth_checks,
            isomorphism_checks,
        ],
        "bijections" => vec![bijection_checks],
        "series" => vec![series_checks],
        "all" => {
            let mut all = Vec::new();
            for s in &SUITES[..4] {
                all.extend(suite_checks(s).unwrap());
            }
            all.extend(conjecture_checks(9).into_iter().map(Check::informational));
            return Some(all);
        }
        _ => return None,
    };
    Some(groups.into_iter().flat_map(|g| g()).collect())
}
