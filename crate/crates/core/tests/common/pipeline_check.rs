//! Re-derives every stage invariant of a pipeline run from its artifacts,
//! using only the graph, the resolved parameters and plain arithmetic.

use inclusion_core::pipeline::{PipelineResult, ResolvedParams};
use inclusion_core::{Graph, Vertex};

use super::{colours_of, is_inclusion_free, palettes_sorted};

fn ln_terms(rp: &ResolvedParams) -> (f64, f64, f64, f64) {
    let big = rp.delta_max as f64;
    (big, big.ln(), big.cbrt(), rp.delta_min as f64)
}

fn members(m: usize, ids: &[usize]) -> Vec<bool> {
    let mut v = vec![false; m];
    for &e in ids {
        v[e] = true;
    }
    v
}

fn deg_in(g: &Graph, member: &[bool], v: Vertex) -> usize {
    g.incident(v).iter().filter(|&&(_, e)| member[e]).count()
}

/// Every check that applies to the run; an accepted run gets them all, a
/// fallback run only the final validity check.
pub fn check_run(g: &Graph, out: &PipelineResult) -> Result<(), String> {
    if !is_inclusion_free(g, &colours_of(&out.colouring)) {
        return Err("final colouring is not inclusion-free".into());
    }
    if out.report.fallback.is_some() {
        return Ok(());
    }
    let rp = out.report.params.as_ref().ok_or("no parameters in report")?;
    let a = &out.artifacts;
    let part = a.partition.as_ref().ok_or("missing partition")?;
    let m = g.edge_count();
    let (big, ln, cbrt, small) = ln_terms(rp);
    let sl = &rp.slack;

    // partition
    for v in 0..g.n() {
        let is_small = g.degree(v) as f64 <= rp.tau;
        if is_small != part.is_small(v) {
            return Err(format!("vertex {v} misclassified"));
        }
    }

    // split windows
    let gp = members(m, a.g_prime.as_ref().ok_or("missing G'")?);
    let hp = members(m, a.h_prime.as_ref().ok_or("missing H'")?);
    for &v in &part.big {
        let d = g.degree(v) as f64;
        let dgp = deg_in(g, &gp, v) as f64;
        let lo = rp.keep_prob * d - sl.split_low * 2.0 * big.sqrt() * ln;
        let hi = rp.keep_prob * d * (1.0 + sl.split_high * small / cbrt);
        if dgp < lo || dgp > hi {
            return Err(format!("split window missed at {v}: {dgp} not in [{lo}, {hi}]"));
        }
    }
    for e in 0..m {
        if hp[e] && !gp[e] {
            return Err("H' not inside G'".into());
        }
    }
    for &v in part.s0.iter() {
        if deg_in(g, &hp, v) != 2 {
            return Err(format!("S0 vertex {v} lacks two H' edges"));
        }
    }
    for &v in part.s1.iter() {
        if deg_in(g, &hp, v) != 1 {
            return Err(format!("S1 vertex {v} lacks one H' edge"));
        }
    }

    // the pair colouring
    let pairs = a.pairs.as_ref().ok_or("missing pair colouring")?;
    let r = pairs.r as u32;
    let pc = colours_of(&pairs.colouring);
    for e in 0..m {
        match (gp[e], pc[e]) {
            (true, Some(c)) if c % 3 != 0 && c <= 3 * r => {}
            (true, c) => return Err(format!("G' edge {e} has colour {c:?}")),
            (false, Some(_)) => return Err(format!("edge {e} outside G' is pair-coloured")),
            (false, None) => {}
        }
    }
    let at = |v: Vertex| -> Vec<u32> { g.incident(v).iter().filter_map(|&(_, e)| pc[e]).collect() };
    let pair = |c: u32| c.div_ceil(3);
    for v in 0..g.n() {
        let cs = at(v);
        for i in 0..cs.len() {
            for j in 0..i {
                if cs[i] == cs[j] {
                    return Err(format!("pair colouring improper at {v}"));
                }
                if part.is_big(v) && pair(cs[i]) == pair(cs[j]) {
                    return Err(format!("big vertex {v} sees both colours of pair {}", pair(cs[i])));
                }
            }
        }
    }
    for &v in &part.s0 {
        let cs = at(v);
        if !cs.iter().any(|&c| c % 3 == 1 && cs.contains(&(c + 1))) {
            return Err(format!("S0 vertex {v} misses a full pair"));
        }
    }
    for &v in &part.s1 {
        let cv = at(v);
        for u in g.neighbours(v).filter(|&u| part.is_small(u)) {
            let cu = at(u);
            if cv.iter().all(|c| cu.contains(c)) {
                return Err(format!("S1 vertex {v} has no colour missing at {u}"));
            }
        }
    }

    // small stage
    let s = a.s.ok_or("missing s")? as u32;
    let small_c = colours_of(a.small.as_ref().ok_or("missing small colouring")?);
    let (lo_s, hi_s) = (3 * r + 1, 3 * r + s);
    for e in 0..m {
        let (u, v) = g.edge(e);
        let gs = part.is_small(u) && part.is_small(v);
        match small_c[e] {
            Some(c) if c < lo_s || c > hi_s => return Err(format!("small colour {c} out of range")),
            Some(_) if !gs || gp[e] => return Err(format!("small stage coloured edge {e}")),
            _ => {}
        }
    }

    // G1 and its windows
    let g1 = members(m, a.g1.as_ref().ok_or("missing G1")?);
    for e in 0..m {
        if g1[e] == (pc[e].is_some() || small_c[e].is_some()) {
            return Err(format!("G1 membership wrong at edge {e}"));
        }
    }
    for &v in &part.big {
        let d = g.degree(v) as f64;
        let d1 = deg_in(g, &g1, v) as f64;
        let lo = d * (1.0 - rp.keep_prob - sl.residual_low * 2.0 / cbrt);
        let hi = (1.0 - rp.keep_prob + sl.residual_high * 2.0 * ln / big.sqrt()) * big;
        if d1 < lo || d1 > hi {
            return Err(format!("residual degree {d1} at {v} outside [{lo}, {hi}]"));
        }
    }

    // thinning
    let f_ids = a.f.as_ref().ok_or("missing F")?;
    let f = members(m, f_ids);
    for e in 0..m {
        if f[e] && !g1[e] {
            return Err("F not inside G1".into());
        }
    }
    let l2 = ln * ln;
    for v in 0..g.n() {
        let df = deg_in(g, &f, v) as f64;
        if part.is_big(v) {
            let (lo, hi) = (l2 / 8.0 / sl.thin_low, sl.thin_high * 2.0 * cbrt / l2);
            if df < lo || df > hi {
                return Err(format!("d_F({v}) = {df} outside [{lo}, {hi}]"));
            }
        } else if df > sl.thin_small * 2.0 * l2 {
            return Err(format!("d_F({v}) = {df} too large for a small vertex"));
        }
    }

    // distinguishing round and the uncolouring rule
    let d = a.distinguish.as_ref().ok_or("missing distinguishing round")?;
    let t = rp.t as u32;
    let mut raw = vec![None; m];
    let mut survives = vec![false; m];
    for (i, &e) in f_ids.iter().enumerate() {
        if d.raw[i] < 1 || d.raw[i] > t {
            return Err(format!("raw colour {} outside 1..={t}", d.raw[i]));
        }
        raw[e] = Some(d.raw[i]);
        survives[e] = d.survives[i];
    }
    for e in 0..m {
        if !survives[e] {
            continue;
        }
        let (u, v) = g.edge(e);
        for w in [u, v] {
            for &(_, e2) in g.incident(w) {
                if e2 != e && raw[e2].is_some() && raw[e2] == raw[e] {
                    return Err(format!("surviving colour repeats next to edge {e}"));
                }
            }
        }
    }
    for e in 0..m {
        let (u, v) = g.edge(e);
        if raw[e].is_some() {
            let unique = [u, v]
                .iter()
                .all(|&w| g.incident(w).iter().all(|&(_, e2)| e2 == e || raw[e2] != raw[e]));
            if unique != survives[e] {
                return Err(format!("edge {e} should have survived = {unique}"));
            }
        }
    }
    for &u in &part.big {
        let fu: Vec<usize> = g.incident(u).iter().map(|&(_, e)| e).filter(|&e| f[e]).collect();
        let need = (((fu.len() as f64) / 4.0 - 1.0) / sl.distinguish).ceil().max(1.0) as usize;
        for v in g.neighbours(u).filter(|&v| part.is_big(v)) {
            let at_v: Vec<u32> = g.incident(v).iter().filter_map(|&(_, e)| raw[e]).collect();
            let have = fu
                .iter()
                .filter(|&&e| survives[e] && g.opposite(e, u) != v && !at_v.contains(&raw[e].unwrap()))
                .count();
            if have < need {
                return Err(format!("I({u},{v}) has {have} < {need}"));
            }
        }
    }

    // final assembly and colour ranges
    let fin = colours_of(&out.colouring);
    let base_t = 3 * r + s;
    let residual = members(m, a.residual.as_ref().ok_or("missing residual")?);
    let res_graph_max = (0..g.n()).map(|v| deg_in(g, &residual, v)).max().unwrap_or(0) as u32;
    for e in 0..m {
        let c = fin[e].ok_or("final colouring not total")?;
        let ok = if gp[e] {
            Some(c) == pc[e]
        } else if small_c[e].is_some() {
            Some(c) == small_c[e]
        } else if survives[e] {
            !residual[e] && c == base_t + raw[e].unwrap()
        } else {
            residual[e] && c > base_t + t && c <= base_t + t + res_graph_max + 1
        };
        if !ok {
            return Err(format!("edge {e} has colour {c} outside its stage range"));
        }
        if c <= 3 * r && c % 3 == 0 {
            return Err(format!("edge {e} uses the forbidden colour {c}"));
        }
    }
    let pal = palettes_sorted(g, &fin);
    for (v, pv) in pal.iter().enumerate() {
        let hit = pv.iter().any(|&c| (lo_s..=hi_s).contains(&c));
        if part.is_big(v) && hit {
            return Err(format!("big vertex {v} sees a small-stage colour"));
        }
        if part.is_small(v) && !part.s0.contains(&v) && !hit {
            return Err(format!("vertex {v} of S minus S0 lacks a small-stage colour"));
        }
    }
    let mut ranges: Vec<(u32, u32)> = out.report.stages.iter().filter_map(|s| s.colour_range).collect();
    ranges.sort_unstable();
    if ranges.windows(2).any(|w| w[0].1 >= w[1].0) {
        return Err(format!("stage colour ranges overlap: {ranges:?}"));
    }
    Ok(())
}
