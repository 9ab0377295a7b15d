//! Codes from k-resolving sets, and the uncovering-driven decoder.
//!
//! The codeword of vertex `u` is its distance vector to the resolving set,
//! so the code matrix `M` is a column selection of the distance matrix.
//! Decoding a received word scans the blocks of an uncovering: each block
//! is a set of positions trusted to be error-free, and the first block
//! whose sphere intersection is non-empty names the transmitted vertex.
//! When the word carries at most r' errors, some block avoids all of them
//! and the intersection is exactly the transmitted vertex.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::designs::{uncovering_for_code, Uncovering};
use crate::graphs::{all_pairs_distances, build_grid, DistanceMatrix, Family};
use crate::resolving::{grid_basis, verify_k_resolving, KResolution, ResolvingSet};
use crate::Error;

/// A word as it came off the channel. Symbols may lie outside the code's
/// alphabet; such symbols simply match no codeword position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReceivedWord(pub Vec<u32>);

impl ReceivedWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<u32>> for ReceivedWord {
    fn from(symbols: Vec<u32>) -> Self {
        ReceivedWord(symbols)
    }
}

/// A code built from a graph and a verified k-resolving set.
///
/// Row `u` of the matrix is the codeword of vertex `u`; the code has
/// length `l` (the set size), `n` codewords, minimum distance at least
/// `k`, and corrects `r = (D-1)/2` errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphCode {
    graph: Family,
    resolving_set: ResolvingSet,
    matrix: Vec<Vec<u32>>,
    alphabet_size: u32,
    min_distance: usize,
    correction_capability: usize,
}

/// On-disk shape of a code file: everything else is derived on load.
#[derive(Serialize, Deserialize)]
struct CodeFile {
    graph: Family,
    resolving_set: Vec<usize>,
    k: usize,
    matrix: Vec<Vec<u32>>,
}

fn hamming(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Minimum pairwise Hamming distance with an attaining pair, `None` for
/// fewer than two rows.
pub fn min_distance_with_pair(rows: &[Vec<u32>]) -> Option<(usize, usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for x in 0..rows.len() {
        for y in (x + 1)..rows.len() {
            let d = hamming(&rows[x], &rows[y]);
            if best.map_or(true, |(bd, _, _)| d < bd) {
                best = Some((d, x, y));
            }
        }
    }
    best
}

/// Outcome of one decoding attempt.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecodeOutcome {
    Decoded { vertex: usize, codeword: Vec<u32> },
    Failed { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeResult {
    pub outcome: DecodeOutcome,
    /// Uncovering blocks examined before the scan stopped.
    pub blocks_tried: usize,
}

impl DecodeResult {
    pub fn decoded_vertex(&self) -> Option<usize> {
        match &self.outcome {
            DecodeOutcome::Decoded { vertex, .. } => Some(*vertex),
            DecodeOutcome::Failed { .. } => None,
        }
    }
}

impl GraphCode {
    /// Builds the code of a k-resolving set, verifying the set first.
    pub fn build(dm: &DistanceMatrix, set: &ResolvingSet) -> Result<Self, Error> {
        if dm.n() < 2 {
            return Err(Error::InvalidParameter(
                "a code needs at least two codewords".into(),
            ));
        }
        match verify_k_resolving(dm, &set.vertices, set.k)? {
            KResolution::Resolving => {}
            KResolution::Violation { x, y, differing } => {
                return Err(Error::NotKResolving {
                    k: set.k,
                    x,
                    y,
                    differing,
                })
            }
        }
        let matrix: Vec<Vec<u32>> = (0..dm.n())
            .map(|u| set.vertices.iter().map(|&v| dm.get(u, v)).collect())
            .collect();
        let (min_distance, _, _) = min_distance_with_pair(&matrix).expect("at least two rows");
        debug_assert!(min_distance >= set.k);
        Ok(GraphCode {
            graph: dm.family(),
            resolving_set: set.clone(),
            matrix,
            alphabet_size: dm.diameter() + 1,
            min_distance,
            correction_capability: (min_distance - 1) / 2,
        })
    }

    /// Code length l: the size of the resolving set.
    pub fn length(&self) -> usize {
        self.resolving_set.len()
    }

    /// Number of codewords: the number of graph vertices.
    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn k(&self) -> usize {
        self.resolving_set.k
    }

    /// Symbols run over `{0..diameter}`.
    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    pub fn min_distance(&self) -> usize {
        self.min_distance
    }

    /// r = (D-1)/2 for minimum distance D.
    pub fn correction_capability(&self) -> usize {
        self.correction_capability
    }

    pub fn graph(&self) -> Family {
        self.graph
    }

    pub fn resolving_set(&self) -> &ResolvingSet {
        &self.resolving_set
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    /// The codeword of vertex `u`: row `u` of the matrix.
    pub fn encode(&self, u: usize) -> Result<Vec<u32>, Error> {
        self.matrix.get(u).cloned().ok_or_else(|| {
            Error::InvalidParameter(format!(
                "vertex {u} out of range for {} codewords",
                self.size()
            ))
        })
    }

    /// Intersection of the spheres indexed by `positions` (0-based): all
    /// vertices whose codewords agree with `word` on those positions,
    /// found by scanning the rows of the submatrix.
    pub fn sphere_intersection(
        &self,
        word: &ReceivedWord,
        positions: &[usize],
    ) -> Result<Vec<usize>, Error> {
        if word.len() != self.length() {
            return Err(Error::InvalidParameter(format!(
                "word length {} does not match code length {}",
                word.len(),
                self.length()
            )));
        }
        if let Some(&p) = positions.iter().find(|&&p| p >= self.length()) {
            return Err(Error::InvalidParameter(format!(
                "position {p} out of range for code length {}",
                self.length()
            )));
        }
        Ok(self
            .matrix
            .iter()
            .enumerate()
            .filter(|(_, row)| positions.iter().all(|&p| row[p] == word.0[p]))
            .map(|(v, _)| v)
            .collect())
    }

    /// Decodes by scanning uncovering blocks in stored order; the first
    /// block whose trusted positions match some codeword decides.
    ///
    /// With at most r' errors this always succeeds and names the
    /// transmitted vertex; between r'+1 and r errors it may still succeed
    /// (some block may avoid the errors), and any success is trustworthy.
    pub fn decode(
        &self,
        word: &ReceivedWord,
        unc: &Uncovering,
        r_prime: usize,
    ) -> Result<DecodeResult, Error> {
        let ell = self.length();
        if word.len() != ell {
            return Err(Error::InvalidParameter(format!(
                "word length {} does not match code length {ell}",
                word.len()
            )));
        }
        if unc.nu != ell {
            return Err(Error::InvalidParameter(format!(
                "uncovering ground set {} does not match code length {ell}",
                unc.nu
            )));
        }
        let r = self.correction_capability;
        if r_prime == 0 || r_prime > r {
            return Err(Error::InvalidParameter(format!(
                "r' = {r_prime} outside 1..={r} for this code"
            )));
        }
        if unc.tau < r_prime {
            return Err(Error::InvalidParameter(format!(
                "uncovering avoids only {}-subsets, needed r' = {r_prime}",
                unc.tau
            )));
        }
        if unc.block_size + r < ell {
            return Err(Error::InvalidParameter(format!(
                "uncovering blocks of size {} leave more than r = {r} untrusted positions",
                unc.block_size
            )));
        }

        let mut blocks_tried = 0;
        for block in &unc.blocks {
            blocks_tried += 1;
            // Blocks index positions 1-based; at most one row can agree
            // with the word on a whole block, so the first match decides.
            let hit = self
                .matrix
                .iter()
                .position(|row| block.iter().all(|&p| row[p - 1] == word.0[p - 1]));
            if let Some(vertex) = hit {
                return Ok(DecodeResult {
                    outcome: DecodeOutcome::Decoded {
                        vertex,
                        codeword: self.matrix[vertex].clone(),
                    },
                    blocks_tried,
                });
            }
        }
        Ok(DecodeResult {
            outcome: DecodeOutcome::Failed {
                reason: "no uncovering block produced a non-empty sphere intersection".into(),
            },
            blocks_tried,
        })
    }

    /// Reference decoder: all vertices whose codewords are nearest to the
    /// word. A singleton whenever the word is within r of some codeword.
    pub fn nearest_neighbors(&self, word: &ReceivedWord) -> Result<Vec<usize>, Error> {
        if word.len() != self.length() {
            return Err(Error::InvalidParameter(format!(
                "word length {} does not match code length {}",
                word.len(),
                self.length()
            )));
        }
        let dists: Vec<usize> = self
            .matrix
            .iter()
            .map(|row| hamming(row, &word.0))
            .collect();
        let best = *dists.iter().min().expect("at least two rows");
        Ok((0..self.size()).filter(|&v| dists[v] == best).collect())
    }

    /// Transmits the codeword of `u` through a channel that corrupts
    /// exactly `errors` positions, each replaced by a uniformly chosen
    /// different alphabet symbol. Fully determined by `seed`.
    pub fn channel(&self, u: usize, errors: usize, seed: u64) -> Result<ReceivedWord, Error> {
        let ell = self.length();
        if errors > ell {
            return Err(Error::InvalidParameter(format!(
                "cannot place {errors} errors in {ell} positions"
            )));
        }
        let mut word = self.encode(u)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let positions = rand::seq::index::sample(&mut rng, ell, errors);
        for p in positions {
            let current = word[p];
            let replacement = rng.random_range(0..self.alphabet_size - 1);
            word[p] = if replacement >= current {
                replacement + 1
            } else {
                replacement
            };
        }
        Ok(ReceivedWord(word))
    }

    pub fn to_json(&self) -> String {
        let file = CodeFile {
            graph: self.graph,
            resolving_set: self.resolving_set.vertices.clone(),
            k: self.resolving_set.k,
            matrix: self.matrix.clone(),
        };
        serde_json::to_string_pretty(&file).expect("code file serializes")
    }

    /// Loads a code file, revalidating its shape and the minimum-distance
    /// promise `D >= k`.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let file: CodeFile = serde_json::from_str(text)
            .map_err(|e| Error::InvalidParameter(format!("bad code file: {e}")))?;
        let n = file.matrix.len();
        if n < 2 {
            return Err(Error::InvalidParameter(
                "code file needs at least two matrix rows".into(),
            ));
        }
        if file.graph.vertex_count() != n {
            return Err(Error::InvalidParameter(format!(
                "graph descriptor {} disagrees with {n} matrix rows",
                file.graph
            )));
        }
        let ell = file.resolving_set.len();
        if ell == 0 || file.matrix.iter().any(|row| row.len() != ell) {
            return Err(Error::InvalidParameter(
                "matrix rows must all match the resolving-set length".into(),
            ));
        }
        if file.k == 0 {
            return Err(Error::InvalidParameter("k must be positive".into()));
        }
        let mut seen = vec![false; n];
        for &v in &file.resolving_set {
            if v >= n || seen[v] {
                return Err(Error::InvalidParameter(format!(
                    "bad resolving-set vertex {v}"
                )));
            }
            seen[v] = true;
        }
        let (min_distance, x, y) = min_distance_with_pair(&file.matrix).expect("at least two rows");
        if min_distance < file.k {
            return Err(Error::NotKResolving {
                k: file.k,
                x,
                y,
                differing: min_distance,
            });
        }
        let alphabet_size = match file.graph {
            Family::Path { n } => n as u32,
            Family::Cycle { n } => (n / 2) as u32 + 1,
            Family::Grid { s, t } => (s + t - 1) as u32,
            Family::Custom { .. } => file.matrix.iter().flatten().max().copied().unwrap_or(0) + 1,
        };
        Ok(GraphCode {
            graph: file.graph,
            resolving_set: ResolvingSet {
                vertices: file.resolving_set,
                k: file.k,
            },
            matrix: file.matrix,
            alphabet_size,
            min_distance,
            correction_capability: (min_distance - 1) / 2,
        })
    }
}

/// Builds the grid code of length 2k together with a matching
/// (2k, 2k−r, r')-uncovering, where r = (k−1)/2 comes from the minimum
/// distance promise of the construction.
pub fn grid_code_suite(
    s: usize,
    t: usize,
    k: usize,
    r_prime: usize,
) -> Result<(GraphCode, Uncovering), Error> {
    let basis = grid_basis(s, t, k)?;
    let dm = all_pairs_distances(&build_grid(s, t)?);
    let code = GraphCode::build(&dm, &basis)?;
    let r = (k - 1) / 2;
    if r_prime == 0 || r_prime > r {
        return Err(Error::InvalidParameter(format!(
            "r' = {r_prime} outside 1..={r} for a grid code with k = {k}"
        )));
    }
    let unc = uncovering_for_code(2 * k, r, r_prime)?;
    Ok((code, unc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_cycle, build_path};
    use itertools::Itertools;

    fn full_code(g: &crate::graphs::Graph, k: usize) -> GraphCode {
        let dm = all_pairs_distances(g);
        let set = ResolvingSet {
            vertices: (0..g.n()).collect(),
            k,
        };
        GraphCode::build(&dm, &set).unwrap()
    }

    fn p5_code() -> GraphCode {
        full_code(&build_path(5).unwrap(), 4)
    }

    #[test]
    fn golden_p5_table() {
        let code = p5_code();
        let expected = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 1, 2, 3],
            vec![2, 1, 0, 1, 2],
            vec![3, 2, 1, 0, 1],
            vec![4, 3, 2, 1, 0],
        ];
        assert_eq!(code.matrix(), &expected[..]);
        assert_eq!(code.min_distance(), 4);
        assert_eq!(code.correction_capability(), 1);
        assert_eq!(code.alphabet_size(), 5);
        assert_eq!(code.encode(2).unwrap(), vec![2, 1, 0, 1, 2]);
    }

    #[test]
    fn golden_c5_table_and_cyclic_shifts() {
        let code = full_code(&build_cycle(5).unwrap(), 4);
        let expected = vec![
            vec![0, 1, 2, 2, 1],
            vec![1, 0, 1, 2, 2],
            vec![2, 1, 0, 1, 2],
            vec![2, 2, 1, 0, 1],
            vec![1, 2, 2, 1, 0],
        ];
        assert_eq!(code.matrix(), &expected[..]);
        assert_eq!(code.min_distance(), 4);
        assert_eq!(code.alphabet_size(), 3);
        assert_eq!(code.encode(0).unwrap(), vec![0, 1, 2, 2, 1]);

        // Each row is the previous one rotated by one position.
        for u in 0..4 {
            for j in 0..5 {
                assert_eq!(code.matrix()[u + 1][(j + 1) % 5], code.matrix()[u][j]);
            }
        }
    }

    #[test]
    fn golden_c6_table() {
        let code = full_code(&build_cycle(6).unwrap(), 4);
        let expected = vec![
            vec![0, 1, 2, 3, 2, 1],
            vec![1, 0, 1, 2, 3, 2],
            vec![2, 1, 0, 1, 2, 3],
            vec![3, 2, 1, 0, 1, 2],
            vec![2, 3, 2, 1, 0, 1],
            vec![1, 2, 3, 2, 1, 0],
        ];
        assert_eq!(code.matrix(), &expected[..]);
        assert_eq!(code.min_distance(), 4);
        assert_eq!(code.correction_capability(), 1);
        assert_eq!(code.alphabet_size(), 4);
    }

    #[test]
    fn build_rejects_non_resolving_sets() {
        let dm = all_pairs_distances(&build_path(5).unwrap());
        let set = ResolvingSet {
            vertices: vec![0, 1],
            k: 3,
        };
        assert!(matches!(
            GraphCode::build(&dm, &set),
            Err(Error::NotKResolving { k: 3, .. })
        ));

        let dm = all_pairs_distances(&build_path(1).unwrap());
        let set = ResolvingSet {
            vertices: vec![0],
            k: 1,
        };
        assert!(GraphCode::build(&dm, &set).is_err());
    }

    #[test]
    fn encode_is_injective() {
        let code = full_code(&build_cycle(7).unwrap(), 3);
        let words: Vec<_> = (0..code.size()).map(|u| code.encode(u).unwrap()).collect();
        for x in 0..words.len() {
            for y in (x + 1)..words.len() {
                assert_ne!(words[x], words[y]);
            }
        }
        assert!(code.encode(7).is_err());
    }

    #[test]
    fn min_distance_helper() {
        assert_eq!(
            min_distance_with_pair(&[vec![0, 1], vec![1, 0]]),
            Some((2, 0, 1))
        );
        assert_eq!(min_distance_with_pair(&[vec![0, 1]]), None);
    }

    #[test]
    fn min_distance_at_least_k_across_families() {
        for n in 4..=9 {
            let dm = all_pairs_distances(&build_path(n).unwrap());
            for k in 3..n {
                let set = crate::resolving::path_basis(n, k).unwrap();
                let code = GraphCode::build(&dm, &set).unwrap();
                assert!(code.min_distance() >= k);
            }
        }
        for (s, t) in [(3, 3), (4, 3), (3, 4)] {
            let dm = all_pairs_distances(&build_grid(s, t).unwrap());
            for k in 1..=(s + t - 2) {
                let set = grid_basis(s, t, k).unwrap();
                let code = GraphCode::build(&dm, &set).unwrap();
                assert!(code.min_distance() >= k);
            }
        }
    }

    #[test]
    fn sphere_intersection_examples() {
        let code = p5_code();

        let exact = ReceivedWord(code.encode(2).unwrap());
        assert_eq!(
            code.sphere_intersection(&exact, &[0, 1, 2, 3, 4]).unwrap(),
            vec![2]
        );

        let garbage = ReceivedWord(vec![9, 9, 9, 9, 9]);
        for size in 1..=5 {
            for positions in (0..5).combinations(size) {
                assert!(code
                    .sphere_intersection(&garbage, &positions)
                    .unwrap()
                    .is_empty());
            }
        }

        // One error at position 0; the remaining positions identify vertex 2.
        let word = ReceivedWord(vec![3, 1, 0, 1, 2]);
        assert_eq!(
            code.sphere_intersection(&word, &[1, 2, 3, 4]).unwrap(),
            vec![2]
        );

        assert!(code.sphere_intersection(&word, &[5]).is_err());
        assert!(code
            .sphere_intersection(&ReceivedWord(vec![0]), &[0])
            .is_err());
    }

    #[test]
    fn decode_examples() {
        let code = p5_code();
        let unc = uncovering_for_code(5, 1, 1).unwrap();

        let word = ReceivedWord(vec![3, 1, 0, 1, 2]);
        let result = code.decode(&word, &unc, 1).unwrap();
        match result.outcome {
            DecodeOutcome::Decoded { vertex, codeword } => {
                assert_eq!(vertex, 2);
                assert_eq!(codeword, vec![2, 1, 0, 1, 2]);
            }
            DecodeOutcome::Failed { .. } => panic!("single error must decode"),
        }
        assert!(result.blocks_tried <= unc.blocks.len());

        for u in 0..code.size() {
            let word = ReceivedWord(code.encode(u).unwrap());
            assert_eq!(
                code.decode(&word, &unc, 1).unwrap().decoded_vertex(),
                Some(u)
            );
        }
    }

    #[test]
    fn decode_far_word_fails() {
        let code = full_code(&build_cycle(6).unwrap(), 4);
        let unc = uncovering_for_code(6, 1, 1).unwrap();

        // Hunt for a word at distance >= 3 from every codeword.
        let mut found = None;
        'outer: for u in 0..code.size() {
            for seed in 0..200 {
                let word = code.channel(u, 3, seed).unwrap();
                let far = code.matrix().iter().all(|row| hamming(row, &word.0) >= 3);
                if far {
                    found = Some(word);
                    break 'outer;
                }
            }
        }
        let word = found.expect("a word far from every codeword exists");
        let result = code.decode(&word, &unc, 1).unwrap();
        assert!(matches!(result.outcome, DecodeOutcome::Failed { .. }));
        assert_eq!(result.blocks_tried, unc.blocks.len());
    }

    #[test]
    fn decode_validations() {
        let code = p5_code();
        let unc = uncovering_for_code(5, 1, 1).unwrap();
        let word = ReceivedWord(vec![0, 1, 2, 3, 4]);

        assert!(code.decode(&ReceivedWord(vec![0, 1]), &unc, 1).is_err());
        assert!(code.decode(&word, &unc, 0).is_err());
        assert!(code.decode(&word, &unc, 2).is_err());

        let wrong_len = uncovering_for_code(8, 1, 1).unwrap();
        assert!(code.decode(&word, &wrong_len, 1).is_err());

        // Blocks too small to pin a unique vertex are rejected.
        let thin =
            Uncovering::new(5, 1, 1, vec![vec![1], vec![2], vec![3], vec![4], vec![5]]).unwrap();
        assert!(code.decode(&word, &thin, 1).is_err());
    }

    #[test]
    fn nearest_neighbor_examples() {
        let code = p5_code();
        for u in 0..code.size() {
            let word = ReceivedWord(code.encode(u).unwrap());
            assert_eq!(code.nearest_neighbors(&word).unwrap(), vec![u]);
        }

        // Within r = 1 the nearest neighbour is unique.
        for u in 0..code.size() {
            for seed in 0..20 {
                let word = code.channel(u, 1, seed).unwrap();
                assert_eq!(code.nearest_neighbors(&word).unwrap(), vec![u]);
            }
        }

        // An equidistant word has several.
        let tie = ReceivedWord(vec![1, 1, 1, 1, 1]);
        assert_eq!(code.nearest_neighbors(&tie).unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn channel_contract() {
        let code = p5_code();
        for u in 0..code.size() {
            assert_eq!(code.channel(u, 0, 7).unwrap().0, code.encode(u).unwrap());

            let word = code.channel(u, 5, 7).unwrap();
            assert_eq!(hamming(&word.0, &code.encode(u).unwrap()), 5);

            for e in 0..=5 {
                let word = code.channel(u, e, 99).unwrap();
                assert_eq!(hamming(&word.0, &code.encode(u).unwrap()), e);
                // Symbols stay inside the alphabet.
                assert!(word.0.iter().all(|&s| s < code.alphabet_size()));
            }
        }
        assert_eq!(
            code.channel(3, 2, 42).unwrap(),
            code.channel(3, 2, 42).unwrap()
        );
        assert!(code.channel(0, 6, 1).is_err());
    }

    #[test]
    fn lemma_dichotomy_on_tiny_code() {
        // For any word within r of codeword u and any position set of size
        // l - r, the sphere intersection is {u} or empty.
        let code = p5_code();
        let r = code.correction_capability();
        for u in 0..code.size() {
            let base = code.encode(u).unwrap();
            for pos in 0..code.length() {
                for symbol in 0..code.alphabet_size() {
                    let mut w = base.clone();
                    w[pos] = symbol;
                    let word = ReceivedWord(w);
                    for positions in (0..code.length()).combinations(code.length() - r) {
                        let hit = code.sphere_intersection(&word, &positions).unwrap();
                        assert!(hit.is_empty() || hit == vec![u]);
                    }
                }
            }
        }
    }

    #[test]
    fn grid_suite_parameters() {
        let (code, unc) = grid_code_suite(7, 5, 7, 2).unwrap();
        assert_eq!(code.length(), 14);
        assert_eq!(code.size(), 35);
        assert_eq!(code.alphabet_size(), 11); // diameter 10
                                              // k = 2m+1 with m = 3: the complement of a (4m+2, m, r')-covering.
        assert_eq!(unc.nu, 14);
        assert_eq!(unc.block_size, 14 - 3);
        assert_eq!(unc.tau, 2);

        let (code, unc) = grid_code_suite(3, 3, 4, 1).unwrap();
        assert_eq!(code.length(), 8);
        // k = 2m with m = 2: the complement of a (4m, m-1, r')-covering,
        // here built from 8 singleton blocks.
        assert_eq!(unc.block_size, 7);
        assert_eq!(unc.blocks.len(), 8);

        assert!(matches!(
            grid_code_suite(2, 2, 3, 1),
            Err(Error::NoKResolvingSet { .. })
        ));
        assert!(grid_code_suite(7, 5, 7, 4).is_err());
    }

    #[test]
    fn code_file_roundtrip() {
        let (code, _) = grid_code_suite(3, 3, 4, 1).unwrap();
        let loaded = GraphCode::from_json(&code.to_json()).unwrap();
        assert_eq!(loaded, code);

        let code = p5_code();
        let loaded = GraphCode::from_json(&code.to_json()).unwrap();
        assert_eq!(loaded, code);

        // Tampering with the matrix until D < k is rejected.
        let mut file: serde_json::Value = serde_json::from_str(&code.to_json()).unwrap();
        file["matrix"][1] = serde_json::json!([0, 1, 2, 3, 3]);
        assert!(matches!(
            GraphCode::from_json(&file.to_string()),
            Err(Error::NotKResolving { .. })
        ));

        assert!(GraphCode::from_json("{}").is_err());
    }
}
