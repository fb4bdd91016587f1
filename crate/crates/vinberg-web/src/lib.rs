//! Browser demo: pick one of the ten gradings, classify its orbits live,
//! draw the containment diagram, and compute Hilbert data per orbit.  All
//! heavy lifting happens in vinberg-core; this crate only shapes JSON and
//! renders a small SVG.

use std::collections::HashMap;
use vinberg_core::cases::{CaseId, LabelScheme};
use vinberg_core::verify::{load_case_data, orbit_geometry, CaseData};
use wasm_bindgen::prelude::*;

fn data_for(case: &str) -> Result<CaseData, String> {
    let id = CaseId::parse(case).map_err(|e| e.to_string())?;
    load_case_data(id)
}

pub fn list_cases_json() -> String {
    let ids: Vec<String> = CaseId::all().iter().map(|c| c.to_string()).collect();
    serde_json::to_string(&ids).unwrap()
}

pub fn orbit_table_json(case: &str) -> Result<String, String> {
    let data = data_for(case)?;
    let mut rows = Vec::new();
    for (pos, o) in data.orbits.iter().enumerate() {
        let fixture_index = data
            .matched
            .iter()
            .find(|(_, &c)| c == pos)
            .map(|(&f, _)| f as i64)
            .unwrap_or(-1);
        let rep: Vec<String> = o
            .rep
            .iter()
            .map(|&(r, c)| {
                let l = if data.case.scheme == LabelScheme::RootVector {
                    data.case.label(r).to_string()
                } else {
                    format!("[{}]", data.case.label(r))
                };
                if c == 1 {
                    l
                } else {
                    format!("{c}*{l}")
                }
            })
            .collect();
        rows.push(serde_json::json!({
            "i": fixture_index,
            "type": o.label,
            "dim": o.dim,
            "rep": rep.join(" + "),
            "in_tables": fixture_index >= 0,
        }));
    }
    let g = &data.case.gl;
    let dims: HashMap<String, usize> = g
        .components
        .keys()
        .filter(|&&i| i >= 0)
        .map(|&i| (i.to_string(), g.dim_component(i)))
        .collect();
    Ok(serde_json::json!({
        "case": data.case.id.to_string(),
        "dim_g": g.dim_g(),
        "grading": dims,
        "levi": data.case.factors.iter().map(|f| f.ty.to_string()).collect::<Vec<_>>(),
        "orbits": rows,
        "conflicts": data.fixture.conflicts.iter().map(|c| c.note.clone()).collect::<Vec<_>>(),
    })
    .to_string())
}

/// Containment diagram as a small standalone SVG: nodes layered by orbit
/// dimension, edges from the printed tables (extra computed orbits are
/// shown unwired, flagged by color).
pub fn hasse_svg_string(case: &str) -> Result<String, String> {
    let data = data_for(case)?;
    let n = data.orbits.len();
    // layer by dimension
    let mut layers: Vec<Vec<usize>> = Vec::new();
    let mut dims: Vec<usize> = data.orbits.iter().map(|o| o.dim).collect();
    dims.sort_unstable();
    dims.dedup();
    for &d in &dims {
        layers.push(
            (0..n)
                .filter(|&i| data.orbits[i].dim == d)
                .collect::<Vec<_>>(),
        );
    }
    let width = 640.0;
    let row_h = 64.0;
    let height = row_h * layers.len() as f64 + 40.0;
    let mut pos: Vec<(f64, f64)> = vec![(0.0, 0.0); n];
    for (li, layer) in layers.iter().enumerate() {
        let y = height - 40.0 - row_h * li as f64;
        let step = width / (layer.len() as f64 + 1.0);
        for (k, &idx) in layer.iter().enumerate() {
            pos[idx] = (step * (k as f64 + 1.0), y);
        }
    }
    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {width} {height}\" font-family=\"monospace\" font-size=\"11\">"
    );
    // edges from the printed diagram
    for e in &data.fixture.hasse {
        if let (Some(&lo), Some(&hi)) = (data.matched.get(&e[0]), data.matched.get(&e[1])) {
            let (x1, y1) = pos[lo];
            let (x2, y2) = pos[hi];
            svg.push_str(&format!(
                "<line x1=\"{x1:.1}\" y1=\"{:.1}\" x2=\"{x2:.1}\" y2=\"{:.1}\" stroke=\"#888\"/>",
                y1 - 12.0,
                y2 + 12.0
            ));
        }
    }
    for (idx, o) in data.orbits.iter().enumerate() {
        let (x, y) = pos[idx];
        let fixture_index = data
            .matched
            .iter()
            .find(|(_, &c)| c == idx)
            .map(|(&f, _)| f as i64)
            .unwrap_or(-1);
        let fill = if fixture_index >= 0 { "#e8f0fe" } else { "#fde8e8" };
        let name = if fixture_index >= 0 {
            format!("O{fixture_index}")
        } else {
            "new".to_string()
        };
        svg.push_str(&format!(
            "<g><rect x=\"{:.1}\" y=\"{:.1}\" width=\"84\" height=\"26\" rx=\"4\" fill=\"{fill}\" stroke=\"#555\"/>\
             <text x=\"{x:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{name} {}</text>\
             <text x=\"{x:.1}\" y=\"{:.1}\" text-anchor=\"middle\" fill=\"#555\">dim {}</text></g>",
            x - 42.0,
            y - 13.0,
            y - 2.0,
            o.label,
            y + 9.0,
            o.dim
        ));
    }
    svg.push_str("</svg>");
    Ok(svg)
}

pub fn hilbert_json(case: &str, orbit: i64) -> Result<String, String> {
    let data = data_for(case)?;
    let pos = if orbit >= 0 {
        *data
            .matched
            .get(&(orbit as usize))
            .ok_or_else(|| format!("orbit {orbit} not in the tables"))?
    } else {
        *data
            .extra
            .first()
            .ok_or_else(|| "no extra orbit in this case".to_string())?
    };
    let g = orbit_geometry(&data.case, &data.orbits, pos, false)?;
    let fixture_row = data
        .fixture
        .orbits
        .iter()
        .find(|fo| data.matched.get(&fo.i) == Some(&pos));
    Ok(serde_json::json!({
        "case": data.case.id.to_string(),
        "orbit": orbit,
        "dim": data.orbits[pos].dim,
        "codim": g.hilbert.codim,
        "numerator": g.hilbert.numerator,
        "degree": g.hilbert.degree,
        "printed_numerator": fixture_row.map(|f| f.numerator.clone()),
        "printed_degree": fixture_row.and_then(|f| f.degree),
        "flags": g.hilbert.flags,
    })
    .to_string())
}

// wasm exports

#[wasm_bindgen]
pub fn list_cases() -> String {
    list_cases_json()
}

#[wasm_bindgen]
pub fn orbit_table(case: &str) -> Result<String, JsValue> {
    orbit_table_json(case).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn hasse_svg(case: &str) -> Result<String, JsValue> {
    hasse_svg_string(case).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn hilbert(case: &str, orbit: i64) -> Result<String, JsValue> {
    hilbert_json(case, orbit).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demo_endpoints_work_natively() {
        let cases: Vec<String> = serde_json::from_str(&list_cases_json()).unwrap();
        assert_eq!(cases.len(), 10);
        let table = orbit_table_json("G2.2").unwrap();
        assert!(table.contains("G2(a1)"));
        let svg = hasse_svg_string("G2.2").unwrap();
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>"));
        let h = hilbert_json("G2.2", 1).unwrap();
        let v: serde_json::Value = serde_json::from_str(&h).unwrap();
        assert_eq!(v["degree"], 3);
        assert_eq!(v["printed_degree"], 3);
    }
}
