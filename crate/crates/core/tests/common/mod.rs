//! Naive oracles shared by the integration tests. Everything here is written
//! from the definitions, without calling into the library.
#![allow(dead_code)]

/// All sequences with `0 <= e_i < i`, in lexicographic order.
pub fn all_invseqs(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for i in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=i as u32).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Vec<u32>> {
    let mut v: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![v.clone()];
    loop {
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return out;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(v.clone());
    }
}

pub fn rel(token: &str, a: u32, b: u32) -> bool {
    match token {
        "lt" => a < b,
        "gt" => a > b,
        "leq" => a <= b,
        "geq" => a >= b,
        "eq" => a == b,
        "neq" => a != b,
        "dash" => true,
        _ => panic!("bad relation {}", token),
    }
}

pub const RELATIONS: [&str; 7] = ["lt", "gt", "leq", "geq", "eq", "neq", "dash"];

/// Whether `e` avoids the triple: no `i < j < k` with
/// `e_i ρ1 e_j`, `e_j ρ2 e_k` and `e_i ρ3 e_k`.
pub fn avoids_triple(e: &[u32], t: [&str; 3]) -> bool {
    let n = e.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if rel(t[0], e[i], e[j]) && rel(t[1], e[j], e[k]) && rel(t[2], e[i], e[k]) {
                    return false;
                }
            }
        }
    }
    true
}

fn same_order_type(a: &[u32], b: &[u32]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| a[i].cmp(&a[j]) == b[i].cmp(&b[j])))
}

/// All increasing index tuples of length `k` below `n`.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Avoidance of every word in `words` (like `"110"`), as subsequences with
/// the same order type.
pub fn avoids_words(e: &[u32], words: &[&str]) -> bool {
    words.iter().all(|w| {
        let w: Vec<u32> = w.bytes().map(|b| (b - b'0') as u32).collect();
        combinations(e.len(), w.len()).iter().all(|idx| {
            let sub: Vec<u32> = idx.iter().map(|&i| e[i]).collect();
            !same_order_type(&sub, &w)
        })
    })
}

/// Avoidance of a dashed pattern such as `"1-23-4"`; letters not separated
/// by a dash must be matched by adjacent entries.
pub fn avoids_vincular(p: &[u32], pattern: &str) -> bool {
    let mut letters = Vec::new();
    let mut adjacent = Vec::new();
    for block in pattern.split('-') {
        for (i, b) in block.bytes().enumerate() {
            if i > 0 {
                adjacent.push(letters.len() - 1);
            }
            letters.push((b - b'0') as u32);
        }
    }
    combinations(p.len(), letters.len()).iter().all(|idx| {
        if adjacent.iter().any(|&a| idx[a + 1] != idx[a] + 1) {
            return true;
        }
        let sub: Vec<u32> = idx.iter().map(|&i| p[i]).collect();
        !same_order_type(&sub, &letters)
    })
}

pub fn join(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// All Dyck words of semi-length `n` in `U < D` lexicographic order.
pub fn dyck_words(n: usize) -> Vec<String> {
    fn go(up: usize, down: usize, n: usize, cur: &mut String, out: &mut Vec<String>) {
        if cur.len() == 2 * n {
            out.push(cur.clone());
            return;
        }
        if up < n {
            cur.push('U');
            go(up + 1, down, n, cur, out);
            cur.pop();
        }
        if down < up {
            cur.push('D');
            go(up, down + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, 0, n, &mut String::new(), &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(n: u64) -> u64 {
    binomial(2 * n, n) / (n + 1)
}
