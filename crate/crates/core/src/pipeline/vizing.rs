//! Proper edge colouring of simple graphs with at most `Δ + 1` colours
//! (Misra–Gries fan recolouring).

use super::table::EdgeTable;
use crate::colouring::{Colour, EdgeColouring};
use crate::graph::{Graph, Vertex};

/// Colours every edge of `g` with a value in `offset+1 ..= offset+Δ+1`.
pub fn complete_vizing(g: &Graph, offset: Colour) -> EdgeColouring {
    let k = g.max_degree() + 1;
    let mut t = EdgeTable::new(g.n(), g.edges(), k);
    for e in 0..g.edge_count() {
        colour_edge(g, &mut t, e);
    }
    EdgeColouring::from_colours(
        t.into_colours()
            .into_iter()
            .map(|c| offset + c.expect("every edge coloured") as Colour + 1),
    )
}

fn colour_edge(g: &Graph, t: &mut EdgeTable, e: usize) {
    let (u, v0) = g.edge(e);
    if let Some(c) = t.common_free(u, v0) {
        t.set(e, c);
        return;
    }

    // maximal fan at u: each (u, f[i+1]) has a colour free at f[i]
    let mut fan: Vec<Vertex> = vec![v0];
    loop {
        let last = *fan.last().expect("fan is non-empty");
        let next = (0..t.k()).find_map(|c| {
            if !t.is_free(last, c) {
                return None;
            }
            let ue = t.edge_at(u, c)?;
            let w = t.other(ue, u);
            (!fan.contains(&w)).then_some(w)
        });
        match next {
            Some(w) => fan.push(w),
            None => break,
        }
    }

    let c = t.first_free(u).expect("u has a free colour");
    let d = t.first_free(*fan.last().expect("fan is non-empty")).expect("fan end has a free colour");
    if c != d {
        // the path from u starts with its d-edge, since c is free at u
        t.swap_path(u, d, c);
    }

    let mut w = None;
    for i in 0..fan.len() {
        if i > 0 {
            let prev_ok = t
                .colour(g.edge_id(u, fan[i]).expect("fan edge"))
                .is_some_and(|col| t.is_free(fan[i - 1], col));
            if !prev_ok {
                break;
            }
        }
        if t.is_free(fan[i], d) {
            w = Some(i);
            break;
        }
    }
    let w = w.expect("inverted path leaves a usable fan prefix");

    // rotate the prefix fan[0..=w]
    let ids: Vec<usize> = fan[..=w].iter().map(|&x| g.edge_id(u, x).expect("fan edge")).collect();
    let shifted: Vec<usize> = ids[1..]
        .iter()
        .map(|&x| t.colour(x).expect("fan edge coloured"))
        .collect();
    for &x in &ids[1..] {
        t.unset(x);
    }
    for (i, &col) in shifted.iter().enumerate() {
        t.set(ids[i], col);
    }
    t.set(ids[w], d);
}
