//! Independent reference implementations used by the integration tests.
//! Nothing here calls into the library's algorithms; only plain data
//! (symbols, tables) crosses the boundary.
#![allow(dead_code)]

pub mod golden;

use std::collections::{HashMap, HashSet, VecDeque};

use num_integer::Integer;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use seifert::action::{
    ExtendedProductActionSpec, Permutation, ProjectedActionDescriptor, RotationNumber, Sign,
    SignedPermutation,
};
use seifert::group::{cyclic, direct_product, FiniteGroup};
use seifert::{OrientabilityClass, SeifertPair, SeifertSymbol};

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- symbols

pub fn random_pair(rng: &mut ChaCha8Rng, max_q: i64, max_p: i64) -> (i64, i64) {
    loop {
        let q = rng.gen_range(1..=max_q);
        let p = rng.gen_range(-max_p..=max_p);
        if q.gcd(&p) == 1 {
            return (q, p);
        }
    }
}

pub fn random_symbol(
    rng: &mut ChaCha8Rng,
    class: OrientabilityClass,
    max_pairs: usize,
    max_q: i64,
    max_p: i64,
) -> SeifertSymbol {
    let genus = match class {
        OrientabilityClass::O1 => rng.gen_range(0..=3),
        OrientabilityClass::N2 => rng.gen_range(1..=4),
    };
    let n = rng.gen_range(0..=max_pairs);
    let pairs: Vec<(i64, i64)> = (0..n).map(|_| random_pair(rng, max_q, max_p)).collect();
    SeifertSymbol::from_pairs(genus, class, &pairs).unwrap()
}

pub fn pairs_of(s: &SeifertSymbol) -> Vec<(i64, i64)> {
    s.pairs().iter().map(|p| (p.q(), p.p())).collect()
}

/// `sum p/q` as a reduced fraction `(num, den)`, `den > 0`.
pub fn sum_oracle(pairs: &[(i64, i64)]) -> (i128, i128) {
    pairs.iter().fold((0i128, 1i128), |(n, d), &(q, p)| {
        let (n2, d2) = (n * q as i128 + p as i128 * d, d * q as i128);
        let g = n2.gcd(&d2).max(1);
        (n2 / g, d2 / g)
    })
}

type State = Vec<(i64, i64)>;

fn sorted(mut v: State) -> State {
    v.sort_unstable();
    v
}

/// One move of the pair calculus in either direction.
fn neighbours(state: &State) -> Vec<State> {
    let mut out = Vec::new();
    let mut with_trivial = state.clone();
    with_trivial.push((1, 0));
    out.push(sorted(with_trivial));
    if let Some(k) = state.iter().position(|&x| x == (1, 0)) {
        let mut v = state.clone();
        v.remove(k);
        out.push(v);
    }
    for a in 0..state.len() {
        let (q, p) = state[a];
        // (q,p) -> (q,p+q) with (1,-1) inserted, and (q,p) -> (q,p-q) with (1,1)
        for (shift, comp) in [(q, -1), (-q, 1)] {
            let mut v = state.clone();
            v[a] = (q, p + shift);
            v.push((1, comp));
            out.push(sorted(v));
        }
        // inverse moves consume a compensating pair at another index
        for s in [-1i64, 1] {
            if let Some(c) = (0..state.len()).find(|&c| c != a && state[c] == (1, s)) {
                let mut v = state.clone();
                v[a] = (q, p + s * q);
                v.remove(c);
                out.push(sorted(v));
            }
        }
    }
    out
}

fn ball(start: &State, depth: usize) -> HashSet<State> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(sorted(start.clone()));
    queue.push_back((sorted(start.clone()), 0));
    while let Some((state, d)) = queue.pop_front() {
        if d == depth {
            continue;
        }
        for next in neighbours(&state) {
            if seen.insert(next.clone()) {
                queue.push_back((next, d + 1));
            }
        }
    }
    seen
}

/// Bidirectional breadth-first search over the move calculus (permutations
/// are free since states are sorted multisets).
pub fn move_equivalent(a: &SeifertSymbol, b: &SeifertSymbol, half_depth: usize) -> bool {
    if a.genus() != b.genus() || a.class() != b.class() {
        return false;
    }
    let left = ball(&pairs_of(a), half_depth);
    let right = ball(&pairs_of(b), half_depth);
    left.iter().any(|s| right.contains(s))
}

/// A random walk of `steps` moves starting at `s`.
pub fn scramble(rng: &mut ChaCha8Rng, s: &SeifertSymbol, steps: usize) -> SeifertSymbol {
    let mut state = pairs_of(s);
    for _ in 0..steps {
        let options = neighbours(&state);
        state = options[rng.gen_range(0..options.len())].clone();
    }
    let perm_seed: Vec<(i64, i64)> = {
        let mut v = state;
        for i in (1..v.len()).rev() {
            let j = rng.gen_range(0..=i);
            v.swap(i, j);
        }
        v
    };
    SeifertSymbol::from_pairs(s.genus(), s.class(), &perm_seed).unwrap()
}

/// Changes one `p` by `+-1`, keeping coprimality; `None` if no pair allows it.
pub fn perturb(rng: &mut ChaCha8Rng, s: &SeifertSymbol) -> Option<SeifertSymbol> {
    let mut pairs = pairs_of(s);
    if pairs.is_empty() {
        pairs.push((1, 0));
    }
    let start = rng.gen_range(0..pairs.len());
    for k in 0..pairs.len() {
        let a = (start + k) % pairs.len();
        let (q, p) = pairs[a];
        for d in [1, -1] {
            if q.gcd(&(p + d)) == 1 {
                pairs[a] = (q, p + d);
                return Some(SeifertSymbol::from_pairs(s.genus(), s.class(), &pairs).unwrap());
            }
        }
    }
    None
}

// ---------------------------------------------------------------- matrices

pub fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0] as i128;
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &x)| x).collect())
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] as i128 * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Smith invariants from determinantal divisors: `d_k` is the gcd of all
/// `k x k` minors and the `k`-th invariant is `d_k / d_(k-1)`.
pub fn snf_by_minors(m: &[Vec<i64>], cols: usize) -> Vec<u64> {
    let rows = m.len();
    let size = rows.min(cols);
    let mut divisors = vec![1i128];
    for k in 1..=size {
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i64>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                g = g.gcd(&det(&minor));
            }
        }
        divisors.push(g);
    }
    (1..=size)
        .map(|k| {
            if divisors[k] == 0 {
                0
            } else {
                (divisors[k] / divisors[k - 1]) as u64
            }
        })
        .collect()
}

/// Exponent-sum matrix of a presentation, read back from its text export.
pub fn relation_matrix(text: &str) -> (Vec<Vec<i64>>, usize) {
    let mut lines = text.lines();
    let generators: Vec<&str> = lines.next().unwrap().split(", ").collect();
    let index: HashMap<&str, usize> = generators.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let rows = lines
        .map(|line| {
            let mut row = vec![0i64; generators.len()];
            if line != "1" {
                for syllable in line.split('*') {
                    let (name, exp) = match syllable.split_once('^') {
                        Some((n, e)) => (n, e.parse::<i64>().unwrap()),
                        None => (syllable, 1),
                    };
                    row[index[name]] += exp;
                }
            }
            row
        })
        .collect();
    (rows, generators.len())
}

/// `Z^r + Z/d...` text from Smith invariants.
pub fn abelian_text(invariants: &[u64], cols: usize) -> String {
    let rank = invariants.iter().filter(|&&d| d != 0).count();
    let free = cols - rank;
    let mut parts = Vec::new();
    match free {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    parts.extend(invariants.iter().filter(|&&d| d > 1).map(|d| format!("Z/{d}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

pub fn inverse_2x2(m: [[i64; 2]; 2]) -> Option<[[i64; 2]; 2]> {
    let d = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if d.abs() != 1 {
        return None;
    }
    Some([[d * m[1][1], -d * m[0][1]], [-d * m[1][0], d * m[0][0]]])
}

pub fn mul_2x2(a: [[i64; 2]; 2], b: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

// ---------------------------------------------------------------- groups

pub fn element_order_multiset(table: &[Vec<usize>]) -> Vec<usize> {
    let mut orders: Vec<usize> = (0..table.len())
        .map(|a| {
            let (mut x, mut k) = (a, 1);
            while x != 0 {
                x = table[x][a];
                k += 1;
            }
            k
        })
        .collect();
    orders.sort_unstable();
    orders
}

pub fn is_homomorphism(source: &[Vec<usize>], target: &[Vec<usize>], images: &[usize]) -> bool {
    let n = source.len();
    (0..n).all(|g| (0..n).all(|h| images[source[g][h]] == target[images[g]][images[h]]))
}

pub fn is_injective(images: &[usize]) -> bool {
    let set: HashSet<usize> = images.iter().copied().collect();
    set.len() == images.len()
}

/// Exhaustive group-axiom check on a raw table.
pub fn is_group_table(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    let latin = (0..n).all(|i| {
        let row: HashSet<usize> = t[i].iter().copied().collect();
        let col: HashSet<usize> = (0..n).map(|k| t[k][i]).collect();
        row.len() == n && col.len() == n && row.iter().all(|&x| x < n)
    });
    latin
        && (0..n).all(|g| t[0][g] == g && t[g][0] == g)
        && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
}

// ---------------------------------------------------------------- actions

/// Folded boundary datum `(epsilon, signed permutation, rotations)`,
/// composed independently of the library.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Folded {
    pub eps: i64,
    pub perm: Vec<usize>,
    pub flips: Vec<bool>,
    pub rot: Vec<RotationNumber>,
}

impl Folded {
    pub fn identity(n: usize) -> Self {
        Folded {
            eps: 1,
            perm: (0..n).collect(),
            flips: vec![false; n],
            rot: vec![RotationNumber::ZERO; n],
        }
    }

    /// `self o other`.
    pub fn then_after(&self, other: &Folded) -> Folded {
        let n = self.perm.len();
        Folded {
            eps: self.eps * other.eps,
            perm: (0..n).map(|i| self.perm[other.perm[i]]).collect(),
            flips: (0..n).map(|i| other.flips[i] ^ self.flips[other.perm[i]]).collect(),
            rot: (0..n)
                .map(|i| {
                    let moved = self.rot[other.perm[i]];
                    let moved = if other.flips[i] { -moved } else { moved };
                    moved + other.rot[i]
                })
                .collect(),
        }
    }

    pub fn power(&self, k: usize) -> Folded {
        (0..k).fold(Folded::identity(self.perm.len()), |acc, _| self.then_after(&acc))
    }
}

/// Base pairs drawn so that several blocks of identical pairs appear.
pub fn random_base(rng: &mut ChaCha8Rng) -> SeifertSymbol {
    let blocks = rng.gen_range(1..=3);
    let mut pairs = Vec::new();
    for _ in 0..blocks {
        let pair = random_pair(rng, 5, 6);
        for _ in 0..rng.gen_range(1..=2) {
            pairs.push(pair);
        }
    }
    SeifertSymbol::from_pairs(rng.gen_range(1..=3), OrientabilityClass::N2, &pairs).unwrap()
}

/// Signed permutation of order dividing `m`, shuffling only within blocks of
/// equal pairs, with zero rotations.
fn random_signed(rng: &mut ChaCha8Rng, pairs: &[SeifertPair], m: usize) -> Folded {
    let n = pairs.len();
    for _ in 0..50 {
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            if pairs[i] == pairs[j] {
                perm.swap(i, j);
            }
        }
        let d = Folded {
            eps: 1,
            perm,
            flips: (0..n).map(|_| rng.gen_bool(0.3)).collect(),
            rot: vec![RotationNumber::ZERO; n],
        };
        if d.power(m) == Folded::identity(n) {
            return d;
        }
    }
    Folded::identity(n)
}

/// Rotation numbers `k/m` on fixed unflipped boundaries keep the order at `m`.
fn with_fixed_rotations(rng: &mut ChaCha8Rng, mut d: Folded, m: usize) -> Folded {
    for i in 0..d.perm.len() {
        if d.perm[i] == i && !d.flips[i] && rng.gen_bool(0.6) {
            d.rot[i] = RotationNumber::new(rng.gen_range(0..m as i64), m as i64);
        }
    }
    d
}

/// A pure rotation and its inverse, used to conjugate data off the fixed points.
fn random_coboundary(rng: &mut ChaCha8Rng, n: usize) -> (Folded, Folded) {
    let mut c = Folded::identity(n);
    for i in 0..n {
        if rng.gen_bool(0.5) {
            c.rot[i] = RotationNumber::new(rng.gen_range(0..12), 12);
        }
    }
    let mut inverse = c.clone();
    inverse.rot.iter_mut().for_each(|r| *r = -*r);
    (c, inverse)
}

fn conjugate(c: &(Folded, Folded), d: &Folded) -> Folded {
    c.0.then_after(d).then_after(&c.1)
}

fn random_eps(rng: &mut ChaCha8Rng, mut d: Folded, m: usize) -> Folded {
    d.eps = if m % 2 == 0 && rng.gen_bool(0.5) { -1 } else { 1 };
    d
}

fn descriptor_from(
    base: SeifertSymbol,
    group: FiniteGroup,
    data: Vec<Folded>,
) -> ProjectedActionDescriptor {
    let n = base.pairs().len();
    ProjectedActionDescriptor {
        epsilon: data.iter().map(|d| Sign::from_i64(d.eps).unwrap()).collect(),
        beta_bar: data
            .iter()
            .map(|d| SignedPermutation {
                perm: Permutation::from_images(d.perm.clone()).unwrap(),
                flips: d.flips.clone(),
            })
            .collect(),
        theta2_bar: (0..n).map(|i| data.iter().map(|d| d.rot[i]).collect()).collect(),
        base,
        group,
    }
}

/// A homomorphism from `Z_m` (or `Z_a x Z_b`) to folded boundary data,
/// found by rejection sampling on generator images.
pub fn random_descriptor(rng: &mut ChaCha8Rng) -> ProjectedActionDescriptor {
    let base = random_base(rng);
    let pairs = base.pairs().to_vec();
    let n = pairs.len();
    let c = random_coboundary(rng, n);
    if rng.gen_bool(0.7) {
        let m = rng.gen_range(1..=6);
        let g = random_signed(rng, &pairs, m);
        let g = with_fixed_rotations(rng, g, m);
        let g = random_eps(rng, g, m);
        let g = conjugate(&c, &g);
        debug_assert_eq!(g.power(m), Folded::identity(n));
        let data = (0..m).map(|k| g.power(k)).collect();
        descriptor_from(base, cyclic(m), data)
    } else {
        let (a, b) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let x = random_signed(rng, &pairs, a);
        let x = with_fixed_rotations(rng, x, a);
        let x = random_eps(rng, x, a);
        let mut y = Folded::identity(n);
        for _ in 0..50 {
            let candidate = random_signed(rng, &pairs, b);
            let candidate = random_eps(rng, candidate, b);
            if x.then_after(&candidate) == candidate.then_after(&x) {
                y = candidate;
                break;
            }
        }
        let (x, y) = (conjugate(&c, &x), conjugate(&c, &y));
        let data = (0..a * b)
            .map(|k| x.power(k / b).then_after(&y.power(k % b)))
            .collect();
        descriptor_from(base, direct_product(&cyclic(a), &cyclic(b)), data)
    }
}

/// `Z_4` on `(0,o1|(3,1),(3,1))`: quarter turns of the fiber, the generator
/// swapping the two exceptional fibers.
pub fn z4_swap_spec() -> ExtendedProductActionSpec {
    let symbol: SeifertSymbol = "(0,o1|(3,1),(3,1))".parse().unwrap();
    let swap = Permutation::from_images(vec![1, 0]).unwrap();
    let id = Permutation::identity(2);
    ExtendedProductActionSpec {
        symbol,
        group: cyclic(4),
        theta1: (0..4).map(|k| RotationNumber::new(k, 4)).collect(),
        alpha: vec![Sign::Plus; 4],
        beta: vec![id.clone(), swap.clone(), id, swap],
        theta2: vec![vec![RotationNumber::ZERO; 4]; 2],
    }
}

/// `Z_2 x Z_3` on `(0,o1|(2,1) x 6)`: the `Z_2` factor turns the fiber by a
/// half, the `Z_3` factor cycles the three lifted pair blocks.
pub fn z2z3_spec() -> ExtendedProductActionSpec {
    let symbol: SeifertSymbol = "(0,o1|(2,1),(2,1),(2,1),(2,1),(2,1),(2,1))".parse().unwrap();
    let group = direct_product(&cyclic(2), &cyclic(3));
    let beta = (0..6)
        .map(|g| {
            let shift = g % 3;
            Permutation::from_images((0..6).map(|k| (2 * ((k / 2 + shift) % 3)) + k % 2).collect())
                .unwrap()
        })
        .collect();
    ExtendedProductActionSpec {
        symbol,
        group,
        theta1: (0..6)
            .map(|g| if g / 3 == 1 { RotationNumber::half() } else { RotationNumber::ZERO })
            .collect(),
        alpha: vec![Sign::Plus; 6],
        beta,
        theta2: vec![vec![RotationNumber::ZERO; 6]; 6],
    }
}

/// `Z_m` turning the fiber by `1/m` and rotating each boundary circle by
/// `k/m` on `(0,o1|(1,0) x r)`.
pub fn random_cyclic_spec(rng: &mut ChaCha8Rng) -> ExtendedProductActionSpec {
    let m = rng.gen_range(3..=6usize);
    let r = rng.gen_range(1..=3);
    let pairs = vec![(1, 0); r];
    let symbol = SeifertSymbol::from_pairs(rng.gen_range(0..=2), OrientabilityClass::O1, &pairs).unwrap();
    let step = rng.gen_range(0..m as i64);
    let boundary_steps: Vec<i64> = (0..r).map(|_| rng.gen_range(0..m as i64)).collect();
    let mm = m as i64;
    ExtendedProductActionSpec {
        symbol,
        group: cyclic(m),
        theta1: (0..mm).map(|k| RotationNumber::new(k * step, mm)).collect(),
        alpha: vec![Sign::Plus; m],
        beta: vec![Permutation::identity(r); m],
        theta2: boundary_steps
            .iter()
            .map(|&s| (0..mm).map(|k| RotationNumber::new(k * s, mm)).collect())
            .collect(),
    }
}
