//! File-driven subcommands. Each takes parsed input text, recomputes the
//! requested invariant, and renders a deterministic plain-text block.

use anyhow::{bail, Result};

use stems_core::complexes::Coefficients;
use stems_core::degree::{degree_by_homology, degree_by_preimage};
use stems_core::exact_linear::Gf2Vec;
use stems_core::framed_loops::{component_classes, residue};
use stems_core::io::{ComplexFile, FormFile, LinkFile, MapFile};
use stems_core::quadratic::{arf, arf_democratic, symplectic_basis};

/// One line per dimension: betti plus torsion.
pub fn cmd_homology(text: &str, coefficients: Coefficients) -> Result<String> {
    let complex = ComplexFile::parse(text)?.build()?;
    let mut out = String::new();
    if complex.is_empty() {
        out.push_str("H0: 0\n");
        return Ok(out);
    }
    for k in 0..=complex.dim() {
        let h = complex.homology(k, coefficients)?;
        let group = match (coefficients, h.betti) {
            (Coefficients::Z, _) => h.to_string(),
            (Coefficients::Z2, 0) => "0".to_string(),
            (Coefficients::Z2, 1) => "Z/2".to_string(),
            (Coefficients::Z2, b) => format!("(Z/2)^{b}"),
        };
        out.push_str(&format!("H{k}: {group}\n"));
    }
    Ok(out)
}

/// Both degree computations; disagreement is a hard failure.
pub fn cmd_degree(text: &str) -> Result<String> {
    let map = MapFile::parse(text)?.build()?;
    let preimage = degree_by_preimage(&map)?;
    let homology = degree_by_homology(&map)?;
    if preimage != homology {
        bail!("invariant breach: preimage degree {preimage} != homology degree {homology}");
    }
    Ok(format!(
        "degree (signed preimages): {preimage}\ndegree (top homology):     {homology}\n"
    ))
}

/// Per-component h-classes, component count, and the residue.
pub fn cmd_residue(text: &str) -> Result<String> {
    let link = LinkFile::parse(text)?.build()?;
    let classes = component_classes(&link)?;
    let res = residue(&link)?;
    let mut out = String::new();
    for (i, class) in classes.iter().enumerate() {
        out.push_str(&format!("component {}: h-class {}\n", i + 1, class.parity()));
    }
    out.push_str(&format!("components: {}\n", classes.len()));
    out.push_str(&format!("Res: {res}\n"));
    Ok(out)
}

fn bits(v: &Gf2Vec) -> String {
    (0..v.len())
        .map(|i| if v.get(i) { '1' } else { '0' })
        .collect()
}

/// Symplectic basis, Arf, and the democratic cross-check; oracle mismatch
/// is a hard failure.
pub fn cmd_arf(text: &str) -> Result<String> {
    let refinement = FormFile::parse(text)?.build()?;
    let basis = symplectic_basis(refinement.gram())?;
    let formula = u8::from(arf(&refinement));
    let democratic = u8::from(arf_democratic(&refinement)?);
    if formula != democratic {
        bail!("invariant breach: arf formula {formula} != democratic count {democratic}");
    }
    let mut out = String::new();
    out.push_str(&format!("genus: {}\n", refinement.genus()));
    for (i, (a, b)) in basis.a.iter().zip(&basis.b).enumerate() {
        out.push_str(&format!(
            "a{} = {}   b{} = {}   q(a)={} q(b)={}\n",
            i + 1,
            bits(a),
            i + 1,
            bits(b),
            u8::from(refinement.q(a)?),
            u8::from(refinement.q(b)?),
        ));
    }
    out.push_str(&format!("arf: {formula}\ndemocratic: {democratic}\n"));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;
    use stems_core::models;

    fn torus_json() -> String {
        serde_json::to_string(&ComplexFile {
            maximal_simplices: models::torus_7().simplices(2).to_vec(),
        })
        .unwrap()
    }

    #[test]
    fn homology_command_output() {
        let out = cmd_homology(&torus_json(), Coefficients::Z).unwrap();
        assert_eq!(out, "H0: Z\nH1: Z^2\nH2: Z\n");

        let rp2 = serde_json::to_string(&ComplexFile {
            maximal_simplices: models::rp2_6().simplices(2).to_vec(),
        })
        .unwrap();
        let out = cmd_homology(&rp2, Coefficients::Z).unwrap();
        assert!(out.contains("H1: Z/2"));

        let empty = cmd_homology(r#"{"maximal_simplices": []}"#, Coefficients::Z).unwrap();
        assert_eq!(empty, "H0: 0\n");
    }

    #[test]
    fn degree_command_output() {
        let map = models::circle_winding_map(2, 3);
        let file = MapFile {
            domain: ComplexFile {
                maximal_simplices: map.domain().simplices(1).to_vec(),
            },
            codomain: ComplexFile {
                maximal_simplices: map.codomain().simplices(1).to_vec(),
            },
            vertex_map: map
                .vertex_map()
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
        };
        let out = cmd_degree(&serde_json::to_string(&file).unwrap()).unwrap();
        assert!(out.contains("degree (signed preimages): 2"));
        assert!(out.contains("degree (top homology):     2"));
    }

    #[test]
    fn residue_command_output() {
        let text = r#"{"ambient": 4, "components": [{"standard": {"twists": 1, "samples": 64}}]}"#;
        let out = cmd_residue(text).unwrap();
        assert!(out.contains("component 1: h-class 0"));
        assert!(out.contains("components: 1"));
        assert!(out.contains("Res: 1"));
    }

    #[test]
    fn arf_command_output() {
        let out = cmd_arf(r#"{"gram": [[0,1],[1,0]], "basis_q": [1,1]}"#).unwrap();
        assert!(out.contains("arf: 1"));
        assert!(out.contains("democratic: 1"));
        assert!(out.contains("a1 = 10   b1 = 01"));

        let out = cmd_arf(r#"{"gram": [[0,1],[1,0]], "basis_q": [0,0]}"#).unwrap();
        assert!(out.contains("arf: 0"));
    }

    #[test]
    fn arf_from_surface_file() {
        let file = FormFile::FromSurface {
            surface: ComplexFile {
                maximal_simplices: models::torus_grid(3, 3).simplices(2).to_vec(),
            },
            cycles: BTreeMap::from([
                ("a".to_string(), vec![[0u32, 3], [3, 6], [0, 6]]),
                ("b".to_string(), vec![[0u32, 1], [1, 2], [0, 2]]),
            ]),
            residues: BTreeMap::from([("a".to_string(), 1), ("b".to_string(), 1)]),
        };
        let out = cmd_arf(&serde_json::to_string(&file).unwrap()).unwrap();
        assert!(out.contains("genus: 1"));
        assert!(out.contains("arf: 1"));
    }

    #[test]
    fn parse_errors_are_reported() {
        assert!(cmd_homology("not json", Coefficients::Z).is_err());
        assert!(cmd_residue(r#"{"ambient": 9, "components": []}"#).is_err());
    }
}
