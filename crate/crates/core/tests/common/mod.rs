//! Independent reference implementations shared by the integration tests.
//!
//! Everything here works on raw Cayley tables and image arrays. Nothing calls
//! into the endomorphism, degree or monoid modules of the library.

#![allow(dead_code)]

/// `Z/m` under addition.
pub fn cyclic_rows(m: usize) -> Vec<Vec<usize>> {
    (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect()
}

/// Q8 as `±1, ±i, ±j, ±k`, element `2q + s` for unit `q` and sign bit `s`.
pub fn quaternion_rows() -> Vec<Vec<usize>> {
    // unit products on 1,i,j,k: (result, negated)
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (q, neg) = UNIT[x / 2][y / 2];
                    let sign = (x % 2) ^ (y % 2) ^ (neg as usize);
                    2 * q + sign
                })
                .collect()
        })
        .collect()
}

pub fn is_homomorphism(rows: &[Vec<usize>], f: &[usize]) -> bool {
    let n = rows.len();
    (0..n).all(|a| (0..n).all(|b| f[rows[a][b]] == rows[f[a]][f[b]]))
}

/// Every map `G → G` fixing the identity (element 0), filtered to
/// homomorphisms. Sorted lexicographically by image array.
pub fn brute_force_endomorphisms(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = rows.len();
    let mut out = Vec::new();
    let mut f = vec![0usize; n];
    if n == 1 {
        return vec![f];
    }
    loop {
        if is_homomorphism(rows, &f) {
            out.push(f.clone());
        }
        // odometer over f[1..]
        let mut i = n - 1;
        loop {
            f[i] += 1;
            if f[i] < n {
                break;
            }
            f[i] = 0;
            i -= 1;
            if i == 0 {
                out.sort();
                return out;
            }
        }
    }
}

pub fn is_bijective(f: &[usize]) -> bool {
    let mut seen = vec![false; f.len()];
    f.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
}

/// `f ∘ g`.
pub fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn totient(m: u64) -> u64 {
    (1..=m).filter(|&a| gcd(a, m) == 1).count() as u64
}

/// `base^exp mod m` by repeated multiplication.
pub fn naive_pow(base: u64, exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    for _ in 0..exp {
        acc = acc * base % m;
    }
    acc
}

/// Which laws a degree table breaks, decided by exhaustive search over image
/// arrays.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Laws {
    pub identity: bool,
    pub multiplicative: bool,
    pub units: bool,
}

impl Laws {
    pub fn all(&self) -> bool {
        self.identity && self.multiplicative && self.units
    }
}

/// `endos` are image arrays in the order matching `values`.
pub fn check_laws(endos: &[Vec<usize>], values: &[u64], m: u64) -> Laws {
    let index = |f: &Vec<usize>| endos.iter().position(|e| e == f).expect("closed under ∘");
    let id: Vec<usize> = (0..endos[0].len()).collect();
    let identity = values[index(&id)] == 1 % m;
    let mut multiplicative = true;
    'outer: for (a, f) in endos.iter().enumerate() {
        for (b, g) in endos.iter().enumerate() {
            if values[index(&compose(f, g))] != values[a] * values[b] % m {
                multiplicative = false;
                break 'outer;
            }
        }
    }
    let units = endos
        .iter()
        .zip(values)
        .filter(|(f, _)| is_bijective(f))
        .all(|(_, &v)| gcd(v, m) == 1);
    Laws {
        identity,
        multiplicative,
        units,
    }
}
