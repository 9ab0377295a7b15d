//! Covering designs and uncoverings.
//!
//! A (ν,κ,τ)-covering design is a collection of κ-subsets of `{1..ν}` such
//! that every τ-subset lies inside some block. Complementing every block
//! yields a (ν,ν−κ,τ)-uncovering: every τ-subset is disjoint from at least
//! one block. The decoder consumes uncoverings; the blocks are the trusted
//! position sets it scans.
//!
//! Three constructions are provided, tried in this order by
//! [`uncovering_for_code`]: the constant-size partition construction (valid
//! once the block size clears an explicit feasibility check), exhaustive
//! minimal search at tiny scale, and greedy set cover as a fallback.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::Error;

/// Default ground-set cap for exhaustive minimal-covering search.
pub const DEFAULT_COVERING_BRUTE_CAP: usize = 10;

/// Candidate-block budget for the greedy construction.
const GREEDY_BLOCK_BUDGET: u128 = 200_000;

/// A (ν,κ,τ)-covering design over the 1-based ground set `{1..ν}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringDesign {
    pub nu: usize,
    pub kappa: usize,
    pub tau: usize,
    pub blocks: Vec<Vec<usize>>,
}

/// A (ν,ν−κ,τ)-uncovering: blocks of size ν−κ, each τ-subset disjoint
/// from at least one of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Uncovering {
    pub nu: usize,
    pub block_size: usize,
    pub tau: usize,
    pub blocks: Vec<Vec<usize>>,
}

fn validate_blocks(
    nu: usize,
    expected_size: usize,
    blocks: &mut [Vec<usize>],
) -> Result<(), Error> {
    for block in blocks.iter_mut() {
        block.sort_unstable();
        if block.len() != expected_size {
            return Err(Error::InvalidParameter(format!(
                "block {block:?} has {} elements, expected {expected_size}",
                block.len()
            )));
        }
        if block.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!(
                "block {block:?} repeats an element"
            )));
        }
        if block.iter().any(|&p| p == 0 || p > nu) {
            return Err(Error::InvalidParameter(format!(
                "block {block:?} leaves the ground set 1..={nu}"
            )));
        }
    }
    Ok(())
}

impl CoveringDesign {
    /// Validates structure only (block sizes and ranges); the covering
    /// property itself is checked by [`verify_covering`].
    pub fn new(
        nu: usize,
        kappa: usize,
        tau: usize,
        mut blocks: Vec<Vec<usize>>,
    ) -> Result<Self, Error> {
        if !(nu >= kappa && kappa >= tau) {
            return Err(Error::InvalidParameter(format!(
                "covering parameters need nu >= kappa >= tau, got ({nu}, {kappa}, {tau})"
            )));
        }
        validate_blocks(nu, kappa, &mut blocks)?;
        Ok(CoveringDesign {
            nu,
            kappa,
            tau,
            blocks,
        })
    }

    /// Complements every block, turning a covering into an uncovering.
    pub fn complement(&self) -> Uncovering {
        Uncovering {
            nu: self.nu,
            block_size: self.nu - self.kappa,
            tau: self.tau,
            blocks: self
                .blocks
                .iter()
                .map(|b| complement_block(self.nu, b))
                .collect(),
        }
    }
}

impl Uncovering {
    pub fn new(
        nu: usize,
        block_size: usize,
        tau: usize,
        mut blocks: Vec<Vec<usize>>,
    ) -> Result<Self, Error> {
        if block_size + tau > nu {
            return Err(Error::InvalidParameter(format!(
                "uncovering parameters need block_size + tau <= nu, got ({nu}, {block_size}, {tau})"
            )));
        }
        validate_blocks(nu, block_size, &mut blocks)?;
        Ok(Uncovering {
            nu,
            block_size,
            tau,
            blocks,
        })
    }

    /// Complements every block, recovering a covering design.
    pub fn complement(&self) -> CoveringDesign {
        CoveringDesign {
            nu: self.nu,
            kappa: self.nu - self.block_size,
            tau: self.tau,
            blocks: self
                .blocks
                .iter()
                .map(|b| complement_block(self.nu, b))
                .collect(),
        }
    }
}

fn complement_block(nu: usize, block: &[usize]) -> Vec<usize> {
    (1..=nu)
        .filter(|p| block.binary_search(p).is_err())
        .collect()
}

/// Result of checking a design property, with a witness subset on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DesignCheck {
    Holds,
    Violation { witness: Vec<usize> },
}

impl DesignCheck {
    pub fn holds(&self) -> bool {
        matches!(self, DesignCheck::Holds)
    }
}

/// Checks that every τ-subset of the ground set is contained in some block.
/// On failure returns the lexicographically first uncovered τ-subset.
pub fn verify_covering(design: &CoveringDesign) -> DesignCheck {
    for subset in (1..=design.nu).combinations(design.tau) {
        let covered = design
            .blocks
            .iter()
            .any(|b| subset.iter().all(|p| b.binary_search(p).is_ok()));
        if !covered {
            return DesignCheck::Violation { witness: subset };
        }
    }
    DesignCheck::Holds
}

/// Checks that every τ-subset of the ground set is disjoint from some
/// block. On failure returns the first τ-subset meeting every block.
pub fn verify_uncovering(unc: &Uncovering) -> DesignCheck {
    for subset in (1..=unc.nu).combinations(unc.tau) {
        let avoided = unc
            .blocks
            .iter()
            .any(|b| subset.iter().all(|p| b.binary_search(p).is_err()));
        if !avoided {
            return DesignCheck::Violation { witness: subset };
        }
    }
    DesignCheck::Holds
}

/// The Schönheim lower bound on the size of a (ν,κ,τ)-covering design:
/// the nested ceiling `⌈ν/κ ⌈(ν−1)/(κ−1) ⌈…⌈(ν−τ+1)/(κ−τ+1)⌉…⌉⌉⌉`.
pub fn schonheim_bound(nu: usize, kappa: usize, tau: usize) -> Result<u64, Error> {
    if !(nu >= kappa && kappa >= tau) {
        return Err(Error::InvalidParameter(format!(
            "Schönheim bound needs nu >= kappa >= tau, got ({nu}, {kappa}, {tau})"
        )));
    }
    let mut bound: u128 = 1;
    for j in (0..tau).rev() {
        bound = ((nu - j) as u128 * bound).div_ceil((kappa - j) as u128);
    }
    u64::try_from(bound).map_err(|_| Error::InstanceTooLarge("Schönheim bound exceeds u64".into()))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result * (n - i) as u128 / (i + 1) as u128;
    }
    result
}

/// The partition underlying the constant-size construction: `{1..ν}` split
/// into as many parts of size `⌊κ/τ⌋` as possible plus at most one smaller
/// part, as consecutive runs.
pub fn petrov_parts(
    a: usize,
    b: i64,
    kappa: usize,
    tau: usize,
) -> Result<(usize, Vec<Vec<usize>>), Error> {
    if a == 0 {
        return Err(Error::InvalidParameter("a must be positive".into()));
    }
    if tau == 0 || kappa < tau {
        return Err(Error::InvalidParameter(format!(
            "construction needs kappa >= tau >= 1, got kappa={kappa}, tau={tau}"
        )));
    }
    let nu_signed = (a * kappa) as i64 + b;
    if nu_signed < kappa as i64 || nu_signed < 1 {
        return Err(Error::InvalidParameter(format!(
            "nu = a*kappa + b = {nu_signed} must be at least kappa = {kappa}"
        )));
    }
    let nu = nu_signed as usize;

    let m = kappa / tau;
    let parts: Vec<Vec<usize>> = (1..=nu)
        .chunks(m)
        .into_iter()
        .map(|chunk| chunk.collect())
        .collect();
    let s = parts.len();

    // Feasibility replaces the existential "kappa sufficiently large":
    // the part count must land on a*tau or a*tau + 1, and any tau parts
    // must fit inside one block.
    if s < a * tau || s > a * tau + 1 {
        return Err(Error::ParametersBelowThreshold(format!(
            "partition has {s} parts; the construction needs a*tau={} or {}",
            a * tau,
            a * tau + 1
        )));
    }
    let mut sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|x, y| y.cmp(x));
    let largest_union: usize = sizes.iter().take(tau).sum();
    if largest_union > kappa {
        return Err(Error::ParametersBelowThreshold(format!(
            "union of the {tau} largest parts has {largest_union} points, exceeding kappa = {kappa}"
        )));
    }
    Ok((nu, parts))
}

/// The constant-size covering construction: partition `{1..ν}` with
/// ν = a·κ + b into parts of size `⌊κ/τ⌋`, then take one block per
/// τ-combination of parts, padded with the smallest absent points up to
/// size κ. At most `C(a·τ+1, τ)` blocks, independent of κ.
pub fn petrov_covering(
    a: usize,
    b: i64,
    kappa: usize,
    tau: usize,
) -> Result<CoveringDesign, Error> {
    let (nu, parts) = petrov_parts(a, b, kappa, tau)?;
    let mut blocks = Vec::new();
    for combo in (0..parts.len()).combinations(tau) {
        let mut block: Vec<usize> = combo
            .iter()
            .flat_map(|&i| parts[i].iter().copied())
            .collect();
        block.sort_unstable();
        // Padding points are chosen deterministically: smallest absent.
        let mut candidate = 1;
        while block.len() < kappa {
            if block.binary_search(&candidate).is_err() {
                block.push(candidate);
                block.sort_unstable();
            }
            candidate += 1;
        }
        blocks.push(block);
    }
    debug_assert!(blocks.len() as u128 <= binomial(a * tau + 1, tau));
    Ok(CoveringDesign {
        nu,
        kappa,
        tau,
        blocks,
    })
}

/// Word-packed subset of τ-subset indices.
#[derive(Clone, PartialEq)]
struct CoverageMask {
    words: Vec<u64>,
}

impl CoverageMask {
    fn empty(bits: usize) -> Self {
        CoverageMask {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn test(&self, i: usize) -> bool {
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    fn union(&self, other: &CoverageMask) -> CoverageMask {
        CoverageMask {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(x, y)| x | y)
                .collect(),
        }
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn new_bits(&self, other: &CoverageMask) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(x, y)| (y & !x).count_ones() as usize)
            .sum()
    }
}

/// Precomputed candidate blocks with their τ-subset coverage masks.
struct BlockTable {
    blocks: Vec<Vec<usize>>,
    coverage: Vec<CoverageMask>,
    /// For each τ-subset index, the blocks containing it.
    containing: Vec<Vec<usize>>,
    target_count: usize,
}

fn block_table(nu: usize, kappa: usize, tau: usize) -> BlockTable {
    let targets: Vec<Vec<usize>> = (1..=nu).combinations(tau).collect();
    let blocks: Vec<Vec<usize>> = (1..=nu).combinations(kappa).collect();
    let mut coverage = Vec::with_capacity(blocks.len());
    let mut containing = vec![Vec::new(); targets.len()];
    for (bi, block) in blocks.iter().enumerate() {
        let mut mask = CoverageMask::empty(targets.len());
        for (ti, target) in targets.iter().enumerate() {
            if target.iter().all(|p| block.binary_search(p).is_ok()) {
                mask.set(ti);
                containing[ti].push(bi);
            }
        }
        coverage.push(mask);
    }
    BlockTable {
        blocks,
        coverage,
        containing,
        target_count: targets.len(),
    }
}

/// Exhaustive minimal covering with the default cap of
/// [`DEFAULT_COVERING_BRUTE_CAP`] on ν.
pub fn minimal_covering_bruteforce(
    nu: usize,
    kappa: usize,
    tau: usize,
) -> Result<CoveringDesign, Error> {
    minimal_covering_bruteforce_with_cap(nu, kappa, tau, DEFAULT_COVERING_BRUTE_CAP)
}

/// Finds a covering with the fewest blocks by iterative deepening on the
/// block count, branching on the first uncovered τ-subset. Deterministic:
/// candidate blocks are tried in lexicographic order and the result's
/// blocks are sorted.
pub fn minimal_covering_bruteforce_with_cap(
    nu: usize,
    kappa: usize,
    tau: usize,
    cap: usize,
) -> Result<CoveringDesign, Error> {
    if !(nu >= kappa && kappa >= tau) {
        return Err(Error::InvalidParameter(format!(
            "covering parameters need nu >= kappa >= tau, got ({nu}, {kappa}, {tau})"
        )));
    }
    if nu > cap {
        return Err(Error::InstanceTooLarge(format!(
            "nu = {nu} exceeds the exhaustive-search cap of {cap}"
        )));
    }
    if nu == 0 || tau == 0 {
        // A single block handles the empty subset.
        let block: Vec<usize> = (1..=kappa).collect();
        return Ok(CoveringDesign {
            nu,
            kappa,
            tau,
            blocks: vec![block],
        });
    }

    let table = block_table(nu, kappa, tau);
    let per_block = binomial(kappa, tau) as usize;

    struct Search<'a> {
        table: &'a BlockTable,
        per_block: usize,
        banned: Vec<bool>,
        chosen: Vec<usize>,
    }

    impl Search<'_> {
        fn run(&mut self, remaining: usize, covered: &CoverageMask) -> bool {
            let uncovered = self.table.target_count - covered.count();
            if uncovered == 0 {
                return true;
            }
            if remaining == 0 || uncovered > remaining * self.per_block {
                return false;
            }
            let first = (0..self.table.target_count)
                .find(|&ti| !covered.test(ti))
                .expect("some target is uncovered");
            let candidates = self.table.containing[first].clone();
            let mut newly_banned = Vec::new();
            for &bi in &candidates {
                if self.banned[bi] {
                    continue;
                }
                let next = covered.union(&self.table.coverage[bi]);
                self.chosen.push(bi);
                if self.run(remaining - 1, &next) {
                    return true;
                }
                self.chosen.pop();
                // Any covering using this block for `first` was just
                // exhausted; later branches may skip it.
                self.banned[bi] = true;
                newly_banned.push(bi);
            }
            for bi in newly_banned {
                self.banned[bi] = false;
            }
            false
        }
    }

    let mut search = Search {
        table: &table,
        per_block,
        banned: vec![false; table.blocks.len()],
        chosen: Vec::new(),
    };
    let empty = CoverageMask::empty(table.target_count);
    for count in 1.. {
        if search.run(count, &empty) {
            let mut blocks: Vec<Vec<usize>> = search
                .chosen
                .iter()
                .map(|&bi| table.blocks[bi].clone())
                .collect();
            blocks.sort_unstable();
            return Ok(CoveringDesign {
                nu,
                kappa,
                tau,
                blocks,
            });
        }
    }
    unreachable!("taking every kappa-subset always covers");
}

/// Greedy covering: repeatedly adds the κ-subset covering the most still
/// uncovered τ-subsets (first in lexicographic order on ties). Refuses
/// instances whose candidate-block count exceeds an internal budget.
pub fn greedy_covering(nu: usize, kappa: usize, tau: usize) -> Result<CoveringDesign, Error> {
    if !(nu >= kappa && kappa >= tau) {
        return Err(Error::InvalidParameter(format!(
            "covering parameters need nu >= kappa >= tau, got ({nu}, {kappa}, {tau})"
        )));
    }
    if binomial(nu, kappa) > GREEDY_BLOCK_BUDGET {
        return Err(Error::ConstructionUnavailable(format!(
            "greedy covering would enumerate C({nu},{kappa}) > {GREEDY_BLOCK_BUDGET} candidate blocks"
        )));
    }
    if tau == 0 {
        let block: Vec<usize> = (1..=kappa).collect();
        return Ok(CoveringDesign {
            nu,
            kappa,
            tau,
            blocks: vec![block],
        });
    }
    let table = block_table(nu, kappa, tau);
    let mut covered = CoverageMask::empty(table.target_count);
    let mut blocks = Vec::new();
    while covered.count() < table.target_count {
        let (best, _) = table
            .coverage
            .iter()
            .enumerate()
            .map(|(bi, mask)| (bi, covered.new_bits(mask)))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("at least one candidate block");
        covered = covered.union(&table.coverage[best]);
        blocks.push(table.blocks[best].clone());
    }
    Ok(CoveringDesign {
        nu,
        kappa,
        tau,
        blocks,
    })
}

/// An (ℓ, ℓ−r, r')-uncovering for decoding a code of length ℓ and
/// correction capability r while assuming at most r' errors: the
/// complement of an (ℓ, r, r')-covering design.
///
/// Construction routes, in order: the partition construction where its
/// feasibility check passes, exhaustive minimal search for small ℓ, greedy
/// set cover otherwise. The result is certified by [`verify_uncovering`].
pub fn uncovering_for_code(ell: usize, r: usize, r_prime: usize) -> Result<Uncovering, Error> {
    if r_prime == 0 {
        return Err(Error::InvalidParameter("uncoverings need r' >= 1".into()));
    }
    if r_prime > r {
        return Err(Error::InvalidParameter(format!(
            "r' = {r_prime} exceeds the correction capability r = {r}"
        )));
    }
    if r > ell {
        return Err(Error::InvalidParameter(format!(
            "r = {r} exceeds the code length {ell}"
        )));
    }

    let covering = {
        let a = ell / r;
        let b = (ell - a * r) as i64;
        match petrov_covering(a, b, r, r_prime) {
            Ok(c) => c,
            Err(_) => {
                if ell <= DEFAULT_COVERING_BRUTE_CAP {
                    minimal_covering_bruteforce(ell, r, r_prime)?
                } else {
                    greedy_covering(ell, r, r_prime).map_err(|e| match e {
                        Error::ConstructionUnavailable(msg) => {
                            Error::ConstructionUnavailable(format!(
                                "no ({ell},{r},{r_prime})-covering construction applied: {msg}"
                            ))
                        }
                        other => other,
                    })?
                }
            }
        }
    };
    let unc = covering.complement();
    match verify_uncovering(&unc) {
        DesignCheck::Holds => Ok(unc),
        DesignCheck::Violation { witness } => Err(Error::ConstructionUnavailable(format!(
            "constructed uncovering fails verification at {witness:?}"
        ))),
    }
}
