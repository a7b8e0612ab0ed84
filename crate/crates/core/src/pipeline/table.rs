//! Colour-by-vertex lookup for proper edge colourings of (multi)graphs,
//! with alternating-path swaps. Colours are `0..k` internally.

use crate::graph::{EdgeId, Vertex};

const NONE: u32 = u32::MAX;

pub(crate) struct EdgeTable<'a> {
    ends: &'a [(Vertex, Vertex)],
    k: usize,
    colour: Vec<u32>,
    /// `at[v * k + c]`: edge at `v` with colour `c`.
    at: Vec<u32>,
}

impl<'a> EdgeTable<'a> {
    pub fn new(n: usize, ends: &'a [(Vertex, Vertex)], k: usize) -> Self {
        EdgeTable {
            ends,
            k,
            colour: vec![NONE; ends.len()],
            at: vec![NONE; n * k],
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colour(&self, e: EdgeId) -> Option<usize> {
        let c = self.colour[e];
        (c != NONE).then_some(c as usize)
    }

    pub fn other(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.ends[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn edge_at(&self, v: Vertex, c: usize) -> Option<EdgeId> {
        let e = self.at[v * self.k + c];
        (e != NONE).then_some(e as EdgeId)
    }

    pub fn is_free(&self, v: Vertex, c: usize) -> bool {
        self.at[v * self.k + c] == NONE
    }

    pub fn first_free(&self, v: Vertex) -> Option<usize> {
        (0..self.k).find(|&c| self.is_free(v, c))
    }

    pub fn common_free(&self, u: Vertex, v: Vertex) -> Option<usize> {
        (0..self.k).find(|&c| self.is_free(u, c) && self.is_free(v, c))
    }

    pub fn set(&mut self, e: EdgeId, c: usize) {
        let (u, v) = self.ends[e];
        debug_assert!(self.is_free(u, c) && self.is_free(v, c));
        self.colour[e] = c as u32;
        self.at[u * self.k + c] = e as u32;
        self.at[v * self.k + c] = e as u32;
    }

    pub fn unset(&mut self, e: EdgeId) {
        let c = self.colour[e];
        if c == NONE {
            return;
        }
        let (u, v) = self.ends[e];
        let c = c as usize;
        self.at[u * self.k + c] = NONE;
        self.at[v * self.k + c] = NONE;
        self.colour[e] = NONE;
    }

    /// The maximal path that starts at `start` with its `a`-edge and
    /// alternates `a`, `b`. `start` must be missing `b`.
    pub fn path(&self, start: Vertex, a: usize, b: usize) -> (Vec<EdgeId>, Vec<Vertex>) {
        let mut edges = Vec::new();
        let mut vertices = vec![start];
        let mut v = start;
        let mut c = a;
        while let Some(e) = self.edge_at(v, c) {
            edges.push(e);
            v = self.other(e, v);
            vertices.push(v);
            c = if c == a { b } else { a };
        }
        (edges, vertices)
    }

    /// Exchanges `a` and `b` along the path from [`EdgeTable::path`].
    pub fn swap_path(&mut self, start: Vertex, a: usize, b: usize) -> Vec<Vertex> {
        let (edges, vertices) = self.path(start, a, b);
        let old: Vec<usize> = edges.iter().map(|&e| self.colour(e).expect("coloured")).collect();
        for &e in &edges {
            self.unset(e);
        }
        for (&e, &c) in edges.iter().zip(&old) {
            self.set(e, if c == a { b } else { a });
        }
        vertices
    }

    pub fn into_colours(self) -> Vec<Option<usize>> {
        self.colour
            .into_iter()
            .map(|c| (c != NONE).then_some(c as usize))
            .collect()
    }
}
