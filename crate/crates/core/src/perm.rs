//! Permutations, cycle types, conjugacy classes of S_n and A_n (including
//! split classes), a stabilizer-chain order oracle, and explicit two-element
//! generation witnesses for alternating and symmetric groups.

use std::fmt;

use num_integer::Integer;

use crate::cyclotomic::jacobi;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Degree cap for the stabilizer-chain order oracle.
pub const ORDER_ORACLE_DEGREE_CAP: u32 = 16;

/// The cycle structure of a permutation: a partition of n recording cycle
/// lengths. This is the universal conjugacy-class label in S_n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        Ok(CycleType(Partition::new(parts)?))
    }

    pub fn from_partition(p: Partition) -> Self {
        CycleType(p)
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn n(&self) -> u32 {
        self.0.n()
    }

    /// Number of fixed points.
    pub fn fixed_points(&self) -> u32 {
        self.parts().iter().filter(|&&c| c == 1).count() as u32
    }

    /// Sign of any permutation of this type: (-1)^(n - #parts).
    pub fn sign(&self) -> i32 {
        if (self.n() as usize - self.parts().len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// Order of any permutation of this type (lcm of the parts).
    pub fn order(&self) -> u64 {
        self.parts().iter().fold(1u64, |a, &c| a.lcm(&(c as u64)))
    }

    /// True when every part is a power of `p` (so elements have p-power order).
    pub fn is_p_element(&self, p: u32) -> bool {
        self.parts().iter().all(|&c| {
            let mut c = c;
            while c % p == 0 {
                c /= p;
            }
            c == 1
        })
    }

    /// Cycle type of the k-th power of an element of this type.
    pub fn power(&self, k: u64) -> CycleType {
        let mut parts = Vec::new();
        for &c in self.parts() {
            let d = (c as u64).gcd(&k) as u32;
            for _ in 0..d {
                parts.push(c / d);
            }
        }
        CycleType(Partition::new(parts).expect("power parts positive"))
    }

    /// True iff the S_n class of this type splits into two A_n classes:
    /// all parts odd and pairwise distinct. Requires an even type.
    pub fn splits_in_an(&self) -> Result<bool> {
        if !self.is_even() {
            return Err(Error::domain(format!(
                "cycle type {self} is odd: it does not define an A_n class"
            )));
        }
        let parts = self.parts();
        let all_odd = parts.iter().all(|&c| c % 2 == 1);
        let distinct = parts.windows(2).all(|w| w[0] != w[1]);
        Ok(all_odd && distinct)
    }

    /// The canonical class representative: cycles laid out consecutively,
    /// largest first, each cycle in increasing letter order.
    pub fn canonical_rep(&self) -> Permutation {
        let n = self.n() as usize;
        let mut images = vec![0u32; n];
        let mut start = 0usize;
        for &c in self.parts() {
            let c = c as usize;
            for i in 0..c {
                images[start + i] = (start + (i + 1) % c) as u32;
            }
            start += c;
        }
        Permutation::from_images(images).expect("canonical representative is a bijection")
    }

    /// Parses the compressed bracket form, e.g. "[4,2,1^3]".
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::parse(format!("cycle type must be bracketed: {s}")))?;
        let mut parts = Vec::new();
        if !inner.is_empty() {
            for item in inner.split(',') {
                let (base, exp) = match item.split_once('^') {
                    Some((b, e)) => (b, e),
                    None => (item, "1"),
                };
                let base: u32 = base
                    .parse()
                    .map_err(|_| Error::parse(format!("bad cycle length: {item}")))?;
                let exp: u32 = exp
                    .parse()
                    .map_err(|_| Error::parse(format!("bad exponent: {item}")))?;
                if base == 0 || exp == 0 {
                    return Err(Error::parse(format!("bad cycle entry: {item}")));
                }
                for _ in 0..exp {
                    parts.push(base);
                }
            }
        }
        CycleType::new(parts)
    }
}

impl fmt::Display for CycleType {
    /// Compressed bracket form with exponents, largest part first: "[4,2,1^3]".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let parts = self.parts();
        let mut i = 0;
        let mut first = true;
        while i < parts.len() {
            let mut j = i;
            while j < parts.len() && parts[j] == parts[i] {
                j += 1;
            }
            if !first {
                write!(f, ",")?;
            }
            if j - i == 1 {
                write!(f, "{}", parts[i])?;
            } else {
                write!(f, "{}^{}", parts[i], j - i)?;
            }
            first = false;
            i = j;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A conjugacy class of elements of p-power order: all cycle lengths are
/// powers of p and the order of a representative is p^a.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimePowerClass {
    pub base: CycleType,
    pub p: u32,
    pub a: u32,
}

impl PrimePowerClass {
    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.a)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// All non-identity classes of p-power-order elements of S_n, in ascending
/// lexicographic order of the canonical (non-increasing) part vectors.
pub fn enumerate_p_classes(n: u32, p: u32) -> Result<Vec<PrimePowerClass>> {
    if n == 0 {
        return Err(Error::domain("degree must be at least 1"));
    }
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    let mut powers = vec![1u32];
    let mut q = p;
    while q <= n {
        powers.push(q);
        q = match q.checked_mul(p) {
            Some(v) => v,
            None => break,
        };
    }
    let mut types: Vec<Partition> = Partition::all_with_parts(n, &powers)
        .into_iter()
        .filter(|t| t.parts().iter().any(|&c| c > 1))
        .collect();
    types.sort(); // ascending lexicographic on part vectors
    Ok(types
        .into_iter()
        .map(|t| {
            let max = *t.parts().first().unwrap();
            let a = max.ilog(p);
            PrimePowerClass {
                base: CycleType(t),
                p,
                a,
            }
        })
        .collect())
}

/// Tag distinguishing the two A_n classes of a split S_n class. By
/// convention the class containing the canonical representative is `A`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum SplitTag {
    A,
    B,
}

impl SplitTag {
    pub fn flipped(self) -> SplitTag {
        match self {
            SplitTag::A => SplitTag::B,
            SplitTag::B => SplitTag::A,
        }
    }
}

impl fmt::Display for SplitTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitTag::A => write!(f, "A"),
            SplitTag::B => write!(f, "B"),
        }
    }
}

/// Label of an A_n conjugacy class: an even cycle type, plus a tag when the
/// S_n class splits.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AnClassLabel {
    cycle_type: CycleType,
    split: Option<SplitTag>,
}

impl AnClassLabel {
    pub fn new(cycle_type: CycleType, split: Option<SplitTag>) -> Result<Self> {
        let splits = cycle_type.splits_in_an()?;
        match (splits, split.is_some()) {
            (true, false) => Err(Error::domain(format!(
                "class {cycle_type} splits in A_n: a split tag is required"
            ))),
            (false, true) => Err(Error::domain(format!(
                "class {cycle_type} does not split in A_n"
            ))),
            _ => Ok(AnClassLabel { cycle_type, split }),
        }
    }

    pub fn cycle_type(&self) -> &CycleType {
        &self.cycle_type
    }

    pub fn split(&self) -> Option<SplitTag> {
        self.split
    }

    pub fn order(&self) -> u64 {
        self.cycle_type.order()
    }

    /// Class of the k-th power of a representative. For exponents coprime to
    /// the order the tag moves by the sign of the multiplication-by-k map on
    /// the cycles (a product of Jacobi symbols); otherwise the type changes
    /// and the resulting class never splits.
    pub fn power(&self, k: u64) -> AnClassLabel {
        let target = self.cycle_type.power(k);
        if let Some(tag) = self.split {
            if target == self.cycle_type {
                let mut sign = 1i32;
                for &c in self.cycle_type.parts() {
                    sign *= jacobi((k % c as u64) as i64, c as u64);
                }
                let tag = if sign == 1 { tag } else { tag.flipped() };
                return AnClassLabel {
                    cycle_type: target,
                    split: Some(tag),
                };
            }
        }
        debug_assert!(!target.splits_in_an().unwrap_or(false) || target == self.cycle_type);
        AnClassLabel {
            cycle_type: target,
            split: None,
        }
    }
}

impl fmt::Display for AnClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_type)?;
        if let Some(t) = self.split {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// A permutation of {1..n}, stored 0-based internally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x as usize >= n || seen[x as usize] {
                return Err(Error::domain("images do not form a bijection"));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// 1-based image array, as used in JSON serialization.
    pub fn from_images_one_based(images: Vec<u32>) -> Result<Self> {
        if images.iter().any(|&x| x == 0) {
            return Err(Error::domain("1-based images must be positive"));
        }
        Permutation::from_images(images.into_iter().map(|x| x - 1).collect())
    }

    pub fn identity(n: u32) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn images_one_based(&self) -> Vec<u32> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Composition acting left-to-right on points: (a.compose(b))(x) = b(a(x)).
    /// Used internally where orientation does not matter; `then` reads better.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.apply(x)).collect(),
        }
    }

    /// Usual functional composition: (a * b)(x) = a(b(x)).
    pub fn after(&self, other: &Permutation) -> Permutation {
        other.then(self)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// t g t^{-1}.
    pub fn conjugate_by(&self, t: &Permutation) -> Permutation {
        t.inverse().then(self).then(t)
    }

    pub fn pow(&self, k: u64) -> Permutation {
        let mut out = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.after(&base);
            }
            base = base.after(&base.clone());
            k >>= 1;
        }
        out
    }

    /// Cycles of length >= 2 plus fixed points omitted; each cycle starts at
    /// its smallest letter, cycles ordered by smallest letter.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = vec![s as u32];
            seen[s] = true;
            let mut x = self.images[s];
            while x as usize != s {
                seen[x as usize] = true;
                cyc.push(x);
                x = self.images[x as usize];
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut parts: Vec<u32> = self.cycles().iter().map(|c| c.len() as u32).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(Partition::from_desc(parts))
    }

    pub fn sign(&self) -> i32 {
        self.cycle_type().sign()
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// Parses cycle notation "(1 2 3)(4 5)" with 1-based letters; letters may
    /// be separated by spaces or commas. `n` fixes the degree.
    pub fn parse_cycles(s: &str, n: u32) -> Result<Self> {
        let mut images: Vec<u32> = (0..n).collect();
        let t = s.trim();
        if t.is_empty() || t == "()" {
            return Ok(Permutation { images });
        }
        if !t.starts_with('(') || !t.ends_with(')') {
            return Err(Error::parse(format!("bad cycle notation: {s}")));
        }
        let mut moved = vec![false; n as usize];
        for chunk in t[1..t.len() - 1].split(")(") {
            let letters: Vec<u32> = chunk
                .split(|c: char| c == ' ' || c == ',')
                .filter(|w| !w.is_empty())
                .map(|w| {
                    w.parse::<u32>()
                        .map_err(|_| Error::parse(format!("bad letter '{w}' in {s}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if letters.is_empty() {
                continue;
            }
            for &l in &letters {
                if l == 0 || l > n {
                    return Err(Error::parse(format!("letter {l} out of range 1..{n}")));
                }
                if moved[(l - 1) as usize] {
                    return Err(Error::parse(format!("letter {l} repeated in {s}")));
                }
                moved[(l - 1) as usize] = true;
            }
            for i in 0..letters.len() {
                let from = letters[i] - 1;
                let to = letters[(i + 1) % letters.len()] - 1;
                images[from as usize] = to;
            }
        }
        Permutation::from_images(images)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based letters, fixed points omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<u32>> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (i, x) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which of the two A_n classes of a split type contains `g`: `A` iff `g` is
/// conjugate to the canonical representative by an even permutation. Well
/// defined because the centralizer of a split class is contained in A_n.
pub fn split_class_of(g: &Permutation) -> Result<SplitTag> {
    let ct = g.cycle_type();
    if !ct.splits_in_an()? {
        return Err(Error::domain(format!("class {ct} does not split in A_n")));
    }
    let canon = ct.canonical_rep();
    // lay out both permutations cycle by cycle (largest first, ties by
    // smallest letter) and read off the conjugator positionally
    let layout = |p: &Permutation| -> Vec<u32> {
        let mut cycles = p.cycles();
        cycles.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        cycles.into_iter().flatten().collect()
    };
    let from = layout(&canon);
    let to = layout(g);
    let mut images = vec![0u32; from.len()];
    for (a, b) in from.iter().zip(to.iter()) {
        images[*a as usize] = *b;
    }
    let sigma = Permutation::from_images(images)?;
    debug_assert_eq!(&canon.conjugate_by(&sigma), g);
    Ok(if sigma.is_even() {
        SplitTag::A
    } else {
        SplitTag::B
    })
}

/// A_n class label of an explicit even permutation.
pub fn an_class_of(g: &Permutation) -> Result<AnClassLabel> {
    let ct = g.cycle_type();
    if ct.splits_in_an()? {
        AnClassLabel::new(ct, Some(split_class_of(g)?))
    } else {
        AnClassLabel::new(ct, None)
    }
}

// ---------------------------------------------------------------------------
// stabilizer chain (deterministic base 1, 2, ..., n)

/// First base point moved by `g`; `n` for the identity.
fn first_moved(g: &Permutation) -> usize {
    g.images()
        .iter()
        .enumerate()
        .find(|(i, &x)| *i as u32 != x)
        .map(|(i, _)| i)
        .unwrap_or(g.degree() as usize)
}

struct StabilizerChain {
    n: usize,
    /// Strong generators; the generator set of the level-i stabilizer is
    /// every element fixing base points 0..i, i.e. with first_moved >= i.
    sgs: Vec<Permutation>,
    /// transversals[i][q] maps base point i to q within the level-i group.
    transversals: Vec<Vec<Option<Permutation>>>,
}

impl StabilizerChain {
    fn build(n: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabilizerChain {
            n,
            sgs: Vec::new(),
            transversals: vec![Vec::new(); n],
        };
        for g in generators {
            if !g.is_identity() && !chain.sgs.contains(g) {
                chain.sgs.push(g.clone());
            }
        }
        chain.rebuild_transversals();
        chain.complete();
        chain
    }

    fn rebuild_transversals(&mut self) {
        for i in 0..self.n {
            let mut tr: Vec<Option<Permutation>> = vec![None; self.n];
            tr[i] = Some(Permutation::identity(self.n as u32));
            let mut queue = vec![i];
            let mut head = 0;
            while head < queue.len() {
                let q = queue[head];
                head += 1;
                let t_q = tr[q].clone().unwrap();
                for g in self.sgs.iter().filter(|g| first_moved(g) >= i) {
                    let r = g.apply(q as u32) as usize;
                    if tr[r].is_none() {
                        tr[r] = Some(t_q.then(g));
                        queue.push(r);
                    }
                }
            }
            self.transversals[i] = tr;
        }
    }

    /// Strips `h` through the chain; returns the non-identity residue (and
    /// the level where it got stuck) or None when `h` factors completely.
    fn sift(&self, mut h: Permutation) -> Option<Permutation> {
        loop {
            if h.is_identity() {
                return None;
            }
            let level = first_moved(&h);
            if level >= self.n {
                return None;
            }
            match &self.transversals[level][h.apply(level as u32) as usize] {
                Some(t) => {
                    h = t.inverse().after(&h);
                }
                None => return Some(h),
            }
        }
    }

    /// Fixpoint closure: sift every Schreier generator of every level; any
    /// non-trivial residue strictly extends an orbit on the next rebuild, so
    /// the loop terminates.
    fn complete(&mut self) {
        loop {
            let mut added = false;
            'levels: for i in 0..self.n {
                let gens: Vec<Permutation> = self
                    .sgs
                    .iter()
                    .filter(|g| first_moved(g) >= i)
                    .cloned()
                    .collect();
                for q in 0..self.n {
                    let Some(t_q) = self.transversals[i][q].clone() else {
                        continue;
                    };
                    for g in &gens {
                        let r = g.apply(q as u32) as usize;
                        let t_r = self.transversals[i][r]
                            .clone()
                            .expect("orbit closed under its generators");
                        let schreier = t_r.inverse().after(g).after(&t_q);
                        if let Some(residue) = self.sift(schreier) {
                            self.sgs.push(residue);
                            self.rebuild_transversals();
                            added = true;
                            break 'levels;
                        }
                    }
                }
            }
            if !added {
                return;
            }
        }
    }

    fn order(&self) -> u128 {
        self.transversals
            .iter()
            .map(|tr| tr.iter().filter(|t| t.is_some()).count() as u128)
            .product()
    }
}

/// Exact order of the subgroup of S_n generated by `generators`, via a
/// stabilizer chain with base points 1, 2, ..., n.
pub fn group_order(generators: &[Permutation]) -> Result<u128> {
    if generators.is_empty() {
        return Err(Error::domain("at least one generator required"));
    }
    let n = generators[0].degree();
    if generators.iter().any(|g| g.degree() != n) {
        return Err(Error::domain("generators must share a common degree"));
    }
    if n > ORDER_ORACLE_DEGREE_CAP {
        return Err(Error::domain(format!(
            "degree {n} exceeds the order-oracle cap {ORDER_ORACLE_DEGREE_CAP}"
        )));
    }
    Ok(StabilizerChain::build(n as usize, generators).order())
}

fn factorial(n: u32) -> u128 {
    (2..=n as u128).product()
}

// ---------------------------------------------------------------------------
// generation witnesses

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WitnessKind {
    /// Two n-cycles generating A_n (n odd).
    AlternatingCycles,
    /// Two double (n/2)-cycles generating A_n (n even, n > 6).
    AlternatingDoubleCycles,
    /// Two n-cycles generating S_n (n even).
    SymmetricCycles,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessKind::AlternatingCycles => write!(f, "two n-cycles generating A_n"),
            WitnessKind::AlternatingDoubleCycles => {
                write!(f, "two double (n/2)-cycles generating A_n")
            }
            WitnessKind::SymmetricCycles => write!(f, "two n-cycles generating S_n"),
        }
    }
}

/// An explicit pair of conjugate elements together with the verified order of
/// the group they generate.
#[derive(Clone, Debug)]
pub struct GenerationWitness {
    pub n: u32,
    pub kind: WitnessKind,
    pub generators: [Permutation; 2],
    pub conjugator: Permutation,
    pub group_order: u128,
    pub target_order: u128,
}

fn next_permutation(arr: &mut [u32]) -> bool {
    if arr.len() < 2 {
        return false;
    }
    let mut i = arr.len() - 1;
    while i > 0 && arr[i - 1] >= arr[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = arr.len() - 1;
    while arr[j] <= arr[i - 1] {
        j -= 1;
    }
    arr.swap(i - 1, j);
    arr[i..].reverse();
    true
}

/// First conjugate of `h` (over conjugating permutations in lexicographic
/// order) such that the two elements generate a group of order `target`.
fn first_witness(h: &Permutation, target: u128, kind: WitnessKind) -> Result<GenerationWitness> {
    let n = h.degree();
    let mut arr: Vec<u32> = (0..n).collect();
    loop {
        let t = Permutation {
            images: arr.clone(),
        };
        let g2 = h.conjugate_by(&t);
        if g2 != *h {
            let order = group_order(&[h.clone(), g2.clone()])?;
            if order == target {
                return Ok(GenerationWitness {
                    n,
                    kind,
                    generators: [h.clone(), g2],
                    conjugator: t,
                    group_order: order,
                    target_order: target,
                });
            }
        }
        if !next_permutation(&mut arr) {
            return Err(Error::internal(format!(
                "no conjugate witness of kind '{kind}' found at degree {n}: the generation claim fails here"
            )));
        }
    }
}

/// Explicit generation witnesses: for odd n >= 5, two n-cycles generating
/// A_n; for even n > 6, two double (n/2)-cycles generating A_n and two
/// n-cycles generating S_n. n = 6 is rejected (the double-cycle statement
/// requires n > 6).
pub fn verify_generation_lemma(n: u32) -> Result<Vec<GenerationWitness>> {
    if n < 5 {
        return Err(Error::domain("generation witnesses require n >= 5"));
    }
    if n % 2 == 1 {
        let h = CycleType::new(vec![n])?.canonical_rep();
        Ok(vec![first_witness(
            &h,
            factorial(n) / 2,
            WitnessKind::AlternatingCycles,
        )?])
    } else {
        if n == 6 {
            return Err(Error::domain(
                "the double-cycle generation statement requires even n > 6",
            ));
        }
        let double = CycleType::new(vec![n / 2, n / 2])?.canonical_rep();
        let full = CycleType::new(vec![n])?.canonical_rep();
        Ok(vec![
            first_witness(
                &double,
                factorial(n) / 2,
                WitnessKind::AlternatingDoubleCycles,
            )?,
            first_witness(&full, factorial(n), WitnessKind::SymmetricCycles)?,
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_type_examples() {
        let id5 = Permutation::identity(5);
        assert_eq!(id5.cycle_type().parts(), &[1, 1, 1, 1, 1]);
        let c5 = Permutation::parse_cycles("(1 2 3 4 5)", 5).unwrap();
        assert_eq!(c5.cycle_type().parts(), &[5]);
        let g = Permutation::parse_cycles("(1 2)(3 4 5 6)", 6).unwrap();
        assert_eq!(g.cycle_type().parts(), &[4, 2]);
    }

    #[test]
    fn display_and_parse_roundtrip() {
        let g = Permutation::parse_cycles("(1 2)(3 4 5 6)", 7).unwrap();
        assert_eq!(g.to_string(), "(1 2)(3 4 5 6)");
        let ct = CycleType::new(vec![4, 2, 1, 1, 1]).unwrap();
        assert_eq!(ct.to_string(), "[4,2,1^3]");
        assert_eq!(CycleType::parse("[4,2,1^3]").unwrap(), ct);
        assert_eq!(CycleType::parse(" [ 1^5 ] ").unwrap().parts(), &[1; 5]);
    }

    #[test]
    fn p_class_enumeration() {
        let got: Vec<String> = enumerate_p_classes(5, 2)
            .unwrap()
            .iter()
            .map(|c| c.base.to_string())
            .collect();
        assert_eq!(got, vec!["[2,1^3]", "[2^2,1]", "[4,1]"]);
        let got: Vec<String> = enumerate_p_classes(5, 5)
            .unwrap()
            .iter()
            .map(|c| c.base.to_string())
            .collect();
        assert_eq!(got, vec!["[5]"]);
        let got: Vec<String> = enumerate_p_classes(6, 3)
            .unwrap()
            .iter()
            .map(|c| c.base.to_string())
            .collect();
        assert_eq!(got, vec!["[3,1^3]", "[3^2]"]);
        assert!(enumerate_p_classes(5, 4).is_err());
    }

    #[test]
    fn split_criteria() {
        assert!(CycleType::new(vec![5]).unwrap().splits_in_an().unwrap());
        assert!(!CycleType::new(vec![3, 1, 1, 1])
            .unwrap()
            .splits_in_an()
            .unwrap());
        assert!(CycleType::new(vec![9]).unwrap().splits_in_an().unwrap());
        assert!(CycleType::new(vec![2, 1]).unwrap().splits_in_an().is_err());
    }

    #[test]
    fn power_map_types() {
        let ct = CycleType::new(vec![4, 1]).unwrap();
        assert_eq!(ct.power(2).parts(), &[2, 2, 1]);
        assert_eq!(ct.power(3).parts(), &[4, 1]);
        let nine = CycleType::new(vec![9]).unwrap();
        assert_eq!(nine.power(3).parts(), &[3, 3, 3]);
    }

    #[test]
    fn split_power_tags() {
        // 5-cycles in A_5: squaring moves to the other class (2 is not a
        // square mod 5), cubing likewise, fourth powers return
        let label = AnClassLabel::new(CycleType::new(vec![5]).unwrap(), Some(SplitTag::A)).unwrap();
        assert_eq!(label.power(2).split(), Some(SplitTag::B));
        assert_eq!(label.power(3).split(), Some(SplitTag::B));
        assert_eq!(label.power(4).split(), Some(SplitTag::A));
        // order-9 classes are closed under all coprime powers
        let label = AnClassLabel::new(CycleType::new(vec![9]).unwrap(), Some(SplitTag::B)).unwrap();
        for k in [2, 4, 5, 7, 8] {
            assert_eq!(label.power(k).split(), Some(SplitTag::B));
        }
        assert_eq!(label.power(3).split(), None);
        assert_eq!(label.power(3).cycle_type().parts(), &[3, 3, 3]);
    }

    #[test]
    fn split_tag_of_explicit_permutations() {
        // the canonical 5-cycle is in class A by convention; conjugating by a
        // transposition lands in B
        let g = CycleType::new(vec![5]).unwrap().canonical_rep();
        assert_eq!(split_class_of(&g).unwrap(), SplitTag::A);
        let t = Permutation::parse_cycles("(1 2)", 5).unwrap();
        assert_eq!(split_class_of(&g.conjugate_by(&t)).unwrap(), SplitTag::B);
        // squares of class-A elements land where the Jacobi rule says
        assert_eq!(split_class_of(&g.pow(2)).unwrap(), SplitTag::B);
        assert_eq!(split_class_of(&g.pow(4)).unwrap(), SplitTag::A);
    }

    #[test]
    fn order_oracle_small_groups() {
        let c5 = Permutation::parse_cycles("(1 2 3 4 5)", 5).unwrap();
        assert_eq!(group_order(&[c5.clone()]).unwrap(), 5);
        let other = Permutation::parse_cycles("(1 3 5 2 4)", 5).unwrap();
        assert_eq!(group_order(&[c5.clone(), other]).unwrap(), 5);
        // two 5-cycles generating A_5
        let g2 = Permutation::parse_cycles("(1 2 3 5 4)", 5).unwrap();
        assert_eq!(group_order(&[c5, g2]).unwrap(), 60);
    }

    #[test]
    fn order_oracle_full_symmetric() {
        for n in 5..=10u32 {
            let cyc = CycleType::new(vec![n]).unwrap().canonical_rep();
            let swap = Permutation::parse_cycles("(1 2)", n).unwrap();
            assert_eq!(group_order(&[swap, cyc]).unwrap(), factorial(n));
        }
    }

    #[test]
    fn order_oracle_paper_double_cycle_example() {
        // h = (1..5)(6..10), t = (1 2 10): <h, tht^-1> has order 10!/2
        let h = Permutation::parse_cycles("(1 2 3 4 5)(6 7 8 9 10)", 10).unwrap();
        let t = Permutation::parse_cycles("(1 2 10)", 10).unwrap();
        let h2 = h.conjugate_by(&t);
        assert_eq!(group_order(&[h, h2]).unwrap(), factorial(10) / 2);
    }

    #[test]
    fn order_oracle_rejects_bad_input() {
        let a = Permutation::identity(5);
        let b = Permutation::identity(6);
        assert!(group_order(&[a.clone(), b]).is_err());
        assert!(group_order(&[Permutation::identity(17)]).is_err());
    }

    #[test]
    fn generation_witness_small() {
        let w = verify_generation_lemma(5).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].group_order, 60);
        assert_eq!(w[0].generators[0].cycle_type().parts(), &[5]);
        assert!(verify_generation_lemma(6).is_err());
        let w = verify_generation_lemma(8).unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w[0].group_order, factorial(8) / 2);
        assert_eq!(w[0].generators[1].cycle_type().parts(), &[4, 4]);
        assert_eq!(w[1].group_order, factorial(8));
        assert_eq!(w[1].generators[1].cycle_type().parts(), &[8]);
    }
}
