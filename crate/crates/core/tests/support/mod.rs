//! Shared test support: an independent brute-force group-cohomology oracle.
//!
//! Classical H²(G, k^*) for a finite abelian-or-not group G acting trivially
//! on the unit group of GF(p): normalized multiplicative 2-cocycles modulo
//! coboundaries, enumerated directly from the definitions. Nothing here
//! touches the weak Hopf machinery — it exists to cross-check class counts.

/// A finite group as a multiplication table; element 0 is the unit.
pub struct GroupTable {
    pub mul: Vec<Vec<usize>>,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.mul.len()
    }
}

/// All units of GF(p), as residues 1..p.
fn units(p: u64) -> Vec<u64> {
    (1..p).collect()
}

/// Enumerates normalized multiplicative 2-cocycles σ: G×G → GF(p)^* with
/// σ(e,·) = σ(·,e) = 1 and σ(g,h)σ(gh,l) = σ(h,l)σ(g,hl).
pub fn normalized_two_cocycles(g: &GroupTable, p: u64) -> Vec<Vec<Vec<u64>>> {
    let n = g.order();
    let us = units(p);
    // free positions: (i, j) with i, j ≥ 1
    let free: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut assign = vec![0usize; free.len()];
    loop {
        let mut sigma = vec![vec![1u64; n]; n];
        for (k, &(i, j)) in free.iter().enumerate() {
            sigma[i][j] = us[assign[k]];
        }
        if is_cocycle(g, p, &sigma) {
            out.push(sigma);
        }
        // odometer
        let mut k = 0;
        loop {
            if k == assign.len() {
                return out;
            }
            assign[k] += 1;
            if assign[k] < us.len() {
                break;
            }
            assign[k] = 0;
            k += 1;
        }
    }
}

fn is_cocycle(g: &GroupTable, p: u64, sigma: &[Vec<u64>]) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = sigma[a][b] * sigma[g.mul[a][b]][c] % p;
                let rhs = sigma[b][c] * sigma[a][g.mul[b][c]] % p;
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Number of cohomology classes: cocycles modulo coboundaries
/// ∂t(g,h) = t(g)t(h)t(gh)⁻¹ for normalized t: G → GF(p)^*.
pub fn h2_class_count(g: &GroupTable, p: u64) -> usize {
    let cocycles = normalized_two_cocycles(g, p);
    let n = g.order();
    let us = units(p);
    // all normalized 1-cochains t with t(e) = 1
    let mut cochains = Vec::new();
    let mut assign = vec![0usize; n - 1];
    'outer: loop {
        let mut t = vec![1u64; n];
        for (k, &a) in assign.iter().enumerate() {
            t[k + 1] = us[a];
        }
        cochains.push(t);
        let mut k = 0;
        loop {
            if k == assign.len() {
                break 'outer;
            }
            assign[k] += 1;
            if assign[k] < us.len() {
                break;
            }
            assign[k] = 0;
            k += 1;
        }
    }
    let inv = |x: u64| -> u64 {
        // Fermat inverse mod p
        let mut acc = 1u64;
        let mut b = x % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    };
    // union cocycles that differ by a coboundary
    let mut class_of: Vec<Option<usize>> = vec![None; cocycles.len()];
    let mut classes = 0;
    for i in 0..cocycles.len() {
        if class_of[i].is_some() {
            continue;
        }
        class_of[i] = Some(classes);
        for t in &cochains {
            let mut moved = vec![vec![1u64; n]; n];
            for a in 0..n {
                for b in 0..n {
                    moved[a][b] =
                        cocycles[i][a][b] * t[a] % p * t[b] % p * inv(t[g.mul[a][b]]) % p;
                }
            }
            if let Some(j) = cocycles.iter().position(|c| *c == moved) {
                class_of[j] = Some(classes);
            }
        }
        classes += 1;
    }
    classes
}

pub fn z2_table() -> GroupTable {
    GroupTable {
        mul: vec![vec![0, 1], vec![1, 0]],
    }
}

pub fn z3_table() -> GroupTable {
    GroupTable {
        mul: vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
    }
}

pub fn z4_table() -> GroupTable {
    GroupTable {
        mul: vec![
            vec![0, 1, 2, 3],
            vec![1, 2, 3, 0],
            vec![2, 3, 0, 1],
            vec![3, 0, 1, 2],
        ],
    }
}

pub fn klein_table() -> GroupTable {
    GroupTable {
        mul: vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ],
    }
}
