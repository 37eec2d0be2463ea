use std::collections::HashSet;
use std::io::{self, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::moves::{move_at_slice, rewrite};
use super::{available_moves, CoxeterType, MoveLabel, PackedWord, Word};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_VERTICES: usize = 50_000_000;

#[derive(Debug, Clone, Copy)]
pub struct RexOptions {
    /// BFS aborts with [`Error::ResourceLimit`] once more vertices than this
    /// have been discovered.
    pub max_vertices: usize,
}

impl Default for RexOptions {
    fn default() -> Self {
        RexOptions {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

/// The graph of reduced expressions of one group element. Vertices are
/// stored packed and sorted; edges are regenerated on demand from
/// [`available_moves`].
#[derive(Debug, Clone)]
pub struct RexGraph {
    ty: CoxeterType,
    seed: Word,
    vertices: Vec<PackedWord>,
    edge_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RexSummary {
    #[serde(rename = "type")]
    pub ty: CoxeterType,
    pub seed: Word,
    pub vertex_count: usize,
    pub edge_count: usize,
}

fn neighbours(ty: CoxeterType, len: usize, packed: PackedWord, out: &mut Vec<PackedWord>) {
    let mut buf = [0u8; PackedWord::MAX_LEN];
    packed.unpack_into(len, &mut buf);
    let letters = &buf[..len];
    for start in 0..len.saturating_sub(1) {
        if let Some((a, b, m)) = move_at_slice(ty, letters, start) {
            let mut next = buf;
            rewrite(&mut next[..len], start, a, b, m);
            out.push(PackedWord::pack(&next[..len]));
        }
    }
}

/// Breadth-first closure of `seed` under braid moves. Each frontier is
/// expanded in parallel and then sorted, so the result does not depend on
/// scheduling.
pub fn rex_graph(ty: CoxeterType, seed: &Word, opts: RexOptions) -> Result<RexGraph> {
    ty.check_word(seed)?;
    if seed.len() > PackedWord::MAX_LEN {
        return Err(Error::ResourceLimit(format!(
            "words longer than {} letters are not supported",
            PackedWord::MAX_LEN
        )));
    }
    if !ty.is_reduced(seed)? {
        return Err(Error::NotReduced(seed.to_string()));
    }
    let len = seed.len();
    let start = PackedWord::pack(seed.letters());
    let mut visited: HashSet<PackedWord> = HashSet::from([start]);
    let mut frontier = vec![start];
    let mut degree_sum = 0usize;

    while !frontier.is_empty() {
        let expanded: Vec<(usize, Vec<PackedWord>)> = frontier
            .par_iter()
            .map(|&p| {
                let mut out = Vec::new();
                neighbours(ty, len, p, &mut out);
                let degree = out.len();
                out.retain(|n| !visited.contains(n));
                (degree, out)
            })
            .collect();
        let mut next = Vec::new();
        for (degree, fresh) in expanded {
            degree_sum += degree;
            next.extend(fresh);
        }
        next.par_sort_unstable();
        next.dedup();
        visited.extend(next.iter().copied());
        if visited.len() > opts.max_vertices {
            return Err(Error::ResourceLimit(format!(
                "rex graph of {ty} exceeds {} vertices",
                opts.max_vertices
            )));
        }
        frontier = next;
    }

    let mut vertices: Vec<PackedWord> = visited.into_iter().collect();
    vertices.par_sort_unstable();
    Ok(RexGraph {
        ty,
        seed: seed.clone(),
        vertices,
        edge_count: degree_sum / 2,
    })
}

impl RexGraph {
    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn seed(&self) -> &Word {
        &self.seed
    }

    pub fn word_len(&self) -> usize {
        self.seed.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len() == self.word_len()
            && w.letters().iter().all(|&l| (1..=4).contains(&l))
            && self.vertices.binary_search(&PackedWord::pack(w.letters())).is_ok()
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> impl Iterator<Item = Word> + '_ {
        let len = self.word_len();
        self.vertices.iter().map(move |p| p.unpack(len))
    }

    /// Each undirected edge once, as `(u, v, move)` with `u < v` and `move`
    /// read from `u`.
    pub fn edges(&self) -> impl Iterator<Item = (Word, Word, MoveLabel)> + '_ {
        self.vertices().flat_map(move |u| {
            available_moves(self.ty, &u)
                .into_iter()
                .filter(|(_, v)| u < *v)
                .map(|(mv, v)| (u.clone(), v, mv))
                .collect::<Vec<_>>()
        })
    }

    /// Writes `u<TAB>v<TAB>kind@position` per edge.
    pub fn export_edges<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (u, v, mv) in self.edges() {
            writeln!(out, "{u}\t{v}\t{mv}")?;
        }
        Ok(())
    }

    pub fn summary(&self) -> RexSummary {
        RexSummary {
            ty: self.ty,
            seed: self.seed.clone(),
            vertex_count: self.vertex_count(),
            edge_count: self.edge_count,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(ty: CoxeterType) -> RexGraph {
        rex_graph(ty, &ty.longest_word(), RexOptions::default()).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(graph(CoxeterType::A2).vertex_count(), 2);
        assert_eq!(graph(CoxeterType::A3).vertex_count(), 16);
        assert_eq!(graph(CoxeterType::C3).vertex_count(), 42);
        assert_eq!(graph(CoxeterType::B3).vertex_count(), 42);
        assert_eq!(graph(CoxeterType::H2).vertex_count(), 2);
    }

    #[test]
    fn longest_a3_words() {
        let g = graph(CoxeterType::A3);
        let expected = [
            "121321", "123121", "123212", "132312", "132132", "312312", "312132", "321232", "212321", "213231",
            "213213", "231231", "231213", "232123", "323123", "321323",
        ];
        for w in expected {
            assert!(g.contains(&w.parse().unwrap()), "{w}");
        }
        // a 16-cycle with two commuting squares: 16 + 2 edges
        assert_eq!(g.edge_count(), 18);
        assert_eq!(g.edges().count(), 18);
    }

    #[test]
    fn edges_are_symmetric_moves_between_reduced_words() {
        for ty in [CoxeterType::A3, CoxeterType::C3, CoxeterType::H3] {
            let g = graph(ty);
            for (u, v, mv) in g.edges() {
                assert!(available_moves(ty, &u).iter().any(|(m, x)| *m == mv && *x == v));
                assert!(available_moves(ty, &v).iter().any(|(_, x)| *x == u));
            }
            for w in g.vertices() {
                assert_eq!(w.len(), g.word_len());
                assert!(ty.is_reduced(&w).unwrap());
            }
        }
    }

    #[test]
    fn any_vertex_regenerates_the_same_graph() {
        for ty in [CoxeterType::A3, CoxeterType::C3] {
            let g = graph(ty);
            let all: Vec<Word> = g.vertices().collect();
            for seed in &all {
                let h = rex_graph(ty, seed, RexOptions::default()).unwrap();
                assert!(h.vertices().eq(all.iter().cloned()));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = rex_graph(
            CoxeterType::C3,
            &CoxeterType::C3.longest_word(),
            RexOptions { max_vertices: 10 },
        );
        assert!(matches!(err, Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn non_reduced_seed_is_rejected() {
        let err = rex_graph(CoxeterType::A3, &"1213211".parse().unwrap(), RexOptions::default());
        assert!(matches!(err, Err(Error::NotReduced(_))));
    }

    #[test]
    fn export_format() {
        let g = graph(CoxeterType::A2);
        let mut buf = Vec::new();
        g.export_edges(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "121\t212\tcubic@1\n");
        let json = serde_json::to_string(&g.summary()).unwrap();
        assert_eq!(json, r#"{"type":"A2","seed":"121","vertex_count":2,"edge_count":1}"#);
    }
}
