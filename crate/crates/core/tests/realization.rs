use std::collections::{BTreeSet, HashMap};

use composihedra::complex::{face_poset_composihedron, facet_trees, FacetTree};
use composihedra::export::{export_json, export_polymake, parse_json};
use composihedra::hull::{enumerate_vertices, feasible, matrix_rank, tight_set, FacePoset};
use composihedra::realization::{
    composihedron_hrep, composihedron_vrep, facet_inequality, multiplihedron_vrep, painted_point,
    HRep, Hyperplane, Point, Rational, Sense, VRep, WeightVector,
};
use composihedra::trees::{enumerate_binary_painted, PaintedTree};
use num::{BigInt, One, Zero};
use proptest::prelude::*;

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn weight_strategy(max_n: usize) -> impl Strategy<Value = Vec<u64>> {
    (2..=max_n).prop_flat_map(|n| prop::collection::vec(1u64..=6, n))
}

/// A point is a vertex when its tight normals span the whole space.
fn is_vertex(p: &Point, h: &HRep) -> bool {
    let tight = tight_set(p, h).unwrap();
    let normals: Vec<Vec<Rational>> = tight
        .iter()
        .map(|&i| h.facets[i].inequality.coeffs.clone())
        .collect();
    matrix_rank(&normals) == h.dimension
}

/// `p` lies outside the hull of `others` iff some direction separates it:
/// find `c` with `c.p >= c.x + 1` for every other point `x`.
fn separable(p: &Point, others: &[&Point]) -> bool {
    let rows: Vec<(Vec<Rational>, Rational)> = others
        .iter()
        .map(|x| {
            (
                x.coords.iter().zip(&p.coords).map(|(a, b)| a - b).collect(),
                -Rational::one(),
            )
        })
        .collect();
    feasible(&rows)
}

#[test]
fn points_are_class_constant_and_distinct() {
    for n in 1..=6 {
        let w = WeightVector::new((1..=n as u64).collect()).unwrap();
        let mut by_class: HashMap<String, Point> = HashMap::new();
        for t in enumerate_binary_painted(n).unwrap() {
            let p = painted_point(&t, &Rational::zero(), &w).unwrap();
            let class = t.canonicalize_domain().to_string();
            if let Some(q) = by_class.get(&class) {
                assert_eq!(q, &p, "{t}");
            }
            by_class.insert(class, p);
        }
        let distinct: BTreeSet<&Point> = by_class.values().collect();
        assert_eq!(distinct.len(), by_class.len(), "n = {n}");
    }
}

#[test]
fn vrep_points_are_vertices_of_hull() {
    for n in 2..=4 {
        let v = composihedron_vrep(n, &WeightVector::units(n)).unwrap();
        let points: Vec<&Point> = v.points().collect();
        for (i, p) in points.iter().enumerate() {
            let others: Vec<&Point> = points
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, q)| *q)
                .collect();
            assert!(separable(p, &others), "n = {n}: {p} is not extreme");
        }
    }
}

#[test]
fn top_inequality_is_total_pairwise_product() {
    for w in [vec![1u64, 1, 1, 1], vec![2, 3, 1, 5], vec![4, 4, 1, 2, 3]] {
        let n = w.len();
        let wv = WeightVector::new(w.clone()).unwrap();
        let mut pairs = 0;
        for i in 0..n {
            for j in i + 1..n {
                pairs += w[i] * w[j];
            }
        }
        let top = facet_inequality(&FacetTree::upper(vec![1; n]).unwrap(), &wv).unwrap();
        assert_eq!(top.rhs, int(pairs as i64));
        assert!(top.coeffs.iter().all(One::is_one));
        for t in enumerate_binary_painted(n).unwrap() {
            let p = painted_point(&t, &Rational::zero(), &wv).unwrap();
            let fully_painted = !t.to_string().contains('(');
            assert_eq!(top.contains(&p), fully_painted, "{t}");
        }
    }
}

#[test]
fn multiplihedron_points_are_distinct_for_interior_q() {
    let third = Rational::new(BigInt::from(1), BigInt::from(3));
    for n in 2..=5 {
        let v = multiplihedron_vrep(n, &third, &WeightVector::units(n)).unwrap();
        assert_eq!(v.vertices.len(), enumerate_binary_painted(n).unwrap().len());
    }
}

#[test]
fn facet_tight_sets_are_refining_classes() {
    for n in 2..=5 {
        let w = WeightVector::units(n);
        let h = composihedron_hrep(n, &w).unwrap();
        let v = composihedron_vrep(n, &w).unwrap();
        for (fi, f) in h.facets.iter().enumerate() {
            let ft = f.tree.as_ref().unwrap().tree();
            for vx in &v.vertices {
                let t = vx.tree.as_ref().unwrap();
                let tight = tight_set(&vx.point, &h).unwrap().contains(&fi);
                assert_eq!(
                    tight,
                    t.domain_refines(&ft).unwrap(),
                    "{t} on {}",
                    f.inequality
                );
            }
        }
    }
}

#[test]
fn hrep_layout() {
    let h = composihedron_hrep(3, &WeightVector::units(3)).unwrap();
    let text: Vec<String> = h.facets.iter().map(|f| f.inequality.to_string()).collect();
    assert_eq!(
        text,
        ["x1 + x2 <= 3", "x1 <= 2", "x2 <= 2", "x1 >= 0", "x2 >= 0"]
    );
    let trees: Vec<FacetTree> = h.facets.iter().map(|f| f.tree.clone().unwrap()).collect();
    assert_eq!(trees, facet_trees(3).unwrap());
    assert!(composihedron_hrep(3, &WeightVector::units(2)).is_err());
    assert!(composihedron_hrep(1, &WeightVector::units(1)).is_err());
}

#[test]
fn json_round_trips() {
    let v = composihedron_vrep(3, &WeightVector::units(3)).unwrap();
    let back: VRep = parse_json(&export_json(&v)).unwrap();
    assert_eq!(back, v);

    use Sense::*;
    let rows = [
        (vec![1, 1], AtMost, 3),
        (vec![1, 0], AtMost, 2),
        (vec![0, 1], AtMost, 2),
        (vec![1, 0], AtLeast, 0),
        (vec![0, 1], AtLeast, 0),
    ];
    let pentagon = HRep::from_inequalities(
        2,
        rows.iter()
            .map(|(a, s, b)| {
                Hyperplane::new(a.iter().map(|&x| int(x)).collect(), *s, int(*b)).unwrap()
            })
            .collect(),
    )
    .unwrap();
    let back: HRep = parse_json(&export_json(&pentagon)).unwrap();
    assert_eq!(back, pentagon);
    assert_eq!(enumerate_vertices(&back).unwrap().vertices.len(), 5);

    let poset = face_poset_composihedron(4).unwrap().with_bottom("empty");
    assert_eq!(poset.len(), 50);
    let back: FacePoset = parse_json(&export_json(&poset)).unwrap();
    assert_eq!(back, poset);

    let half = Point::new(vec![Rational::new(BigInt::from(-1), BigInt::from(2))]);
    let json = export_json(&half);
    assert!(json.contains("\"num\": \"-1\"") && json.contains("\"den\": \"2\""));
    assert_eq!(parse_json::<Point>(&json).unwrap(), half);
    assert!(parse_json::<Point>(r#"{"coords":[{"num":"1","den":"0"}]}"#).is_err());
    let tree: PaintedTree = parse_json("\"[{.}{.}]\"").unwrap();
    assert_eq!(export_json(&tree), "\"[{.}{.}]\"");
}

#[test]
fn polymake_export() {
    let v = composihedron_vrep(2, &WeightVector::units(2)).unwrap();
    assert_eq!(export_polymake(&v).unwrap(), "POINTS\n1 1\n1 0\n");
    let half = VRep::from_points(
        1,
        vec![Point::new(vec![Rational::new(
            BigInt::from(1),
            BigInt::from(2),
        )])],
    )
    .unwrap();
    assert_eq!(export_polymake(&half).unwrap(), "POINTS\n1 1/2\n");
    assert!(export_polymake(&VRep::from_points(1, vec![]).unwrap()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn facet_tightness_for_any_weights(w in weight_strategy(5)) {
        let n = w.len();
        let wv = WeightVector::new(w).unwrap();
        let h = composihedron_hrep(n, &wv).unwrap();
        for t in enumerate_binary_painted(n).unwrap() {
            let p = painted_point(&t, &Rational::zero(), &wv).unwrap();
            for f in &h.facets {
                prop_assert!(f.inequality.is_satisfied(&p));
                let refines = t.domain_refines(&f.tree.as_ref().unwrap().tree()).unwrap();
                prop_assert_eq!(f.inequality.contains(&p), refines);
            }
            prop_assert!(is_vertex(&p, &h));
        }
    }

    #[test]
    fn hrep_vertices_are_vrep(w in weight_strategy(4)) {
        let n = w.len();
        let wv = WeightVector::new(w).unwrap();
        let computed = enumerate_vertices(&composihedron_hrep(n, &wv).unwrap()).unwrap();
        prop_assert_eq!(computed.point_set(), composihedron_vrep(n, &wv).unwrap().point_set());
    }

    #[test]
    fn point_coordinates_are_bounded_by_weights(w in weight_strategy(6), pick in any::<prop::sample::Index>()) {
        let n = w.len();
        let total: u64 = w.iter().sum();
        let wv = WeightVector::new(w).unwrap();
        let trees = enumerate_binary_painted(n).unwrap();
        let t = pick.get(&trees);
        let p = painted_point(t, &Rational::zero(), &wv).unwrap();
        prop_assert_eq!(p.dimension(), n - 1);
        for c in &p.coords {
            prop_assert!(*c >= Rational::zero() && *c <= int((total * total / 4) as i64));
        }
    }
}
