//! Consistency checks between the combinatorial and geometric descriptions of
//! `CK(n)`, as run by `composihedra verify`.

use crate::complex::{face_poset_composihedron, facet_product, facet_subposet};
use crate::error::{Error, Result};
use crate::hull::{enumerate_vertices, face_lattice_geometric, poset_isomorphic};
use crate::realization::{
    composihedron_hrep, composihedron_vrep, painted_point, Rational, WeightVector,
};
use crate::report::Check;
use crate::trees::enumerate_binary_painted;

/// Run every check for `CK(n)` with the given weights. Checks that fail are
/// reported, not returned as errors; errors mean the input was invalid.
pub fn verify_composihedron(n: usize, w: &WeightVector) -> Result<Vec<Check>> {
    if n < 2 {
        return Err(Error::InvalidLeafCount(n));
    }
    let h = composihedron_hrep(n, w)?;
    let v = composihedron_vrep(n, w)?;
    let mut checks = Vec::new();

    let expected = (1usize << (n - 1)) + n - 2;
    checks.push(Check {
        name: "facet_count".into(),
        passed: h.facets.len() == expected,
        detail: format!("{} inequalities, expected {expected}", h.facets.len()),
    });

    let (passed, detail) = match enumerate_vertices(&h) {
        Ok(computed) => {
            let same = computed.point_set() == v.point_set();
            (
                same,
                format!(
                    "{} vertices from inequalities, {} from trees",
                    computed.vertices.len(),
                    v.vertices.len()
                ),
            )
        }
        Err(e) => (false, e.to_string()),
    };
    checks.push(Check {
        name: "vertices_match".into(),
        passed,
        detail,
    });

    let mut bad = Vec::new();
    let mut pairs = 0;
    for t in enumerate_binary_painted(n)? {
        let p = painted_point(&t, &Rational::from_integer(0.into()), w)?;
        for f in &h.facets {
            let tree = f.tree.as_ref().expect("composihedron facets are tagged");
            let refines = t.domain_refines(&tree.tree())?;
            pairs += 1;
            if !f.inequality.is_satisfied(&p) || f.inequality.contains(&p) != refines {
                bad.push(format!("{t} on {tree}"));
            }
        }
    }
    checks.push(Check {
        name: "facet_tightness".into(),
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{pairs} tree/facet pairs")
        } else {
            bad.join("; ")
        },
    });

    let geometric = face_lattice_geometric(&h, &v)?;
    let combinatorial = face_poset_composihedron(n)?.with_bottom("empty");
    checks.push(Check {
        name: "face_lattice".into(),
        passed: poset_isomorphic(&geometric, &combinatorial).is_some(),
        detail: format!("{} faces including the empty face", geometric.len()),
    });

    let mut bad = Vec::new();
    let facets: Vec<_> = h.facets.iter().filter_map(|f| f.tree.clone()).collect();
    for f in &facets {
        if poset_isomorphic(&facet_subposet(n, f)?, &facet_product(f)?).is_none() {
            bad.push(f.to_string());
        }
    }
    checks.push(Check {
        name: "facet_products".into(),
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} facets", facets.len())
        } else {
            bad.join(", ")
        },
    });
    Ok(checks)
}
