use composihedra::complex::{
    face_poset_associahedron, face_poset_composihedron, face_poset_multiplihedron, facet_subposet,
    facet_trees, quotient_to_composihedron, FacetTree,
};
use composihedra::counting::{catalan, facet_breakdown, vertex_count};
use composihedra::hull::{poset_isomorphic, FacePoset};
use composihedra::trees::enumerate_binary_painted;
use composihedra::Error;
use num::BigUint;

fn euler(p: &FacePoset) -> i64 {
    p.rank_counts()
        .iter()
        .map(|&(r, c)| if r % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

#[test]
fn composihedron_face_counts() {
    for n in 2..=6 {
        let p = face_poset_composihedron(n).unwrap();
        assert_eq!(
            BigUint::from(p.count_at_rank(0)),
            vertex_count(n as u32),
            "n = {n}"
        );
        assert_eq!(
            p.count_at_rank(n as i64 - 2) as u64,
            facet_breakdown(n).unwrap().total
        );
        assert_eq!(euler(&p), 1, "n = {n}");
    }
}

#[test]
fn associahedron_and_multiplihedron_counts() {
    for n in 2..=6 {
        let k = face_poset_associahedron(n).unwrap();
        assert_eq!(BigUint::from(k.count_at_rank(0)), catalan(n as u32 - 1));
        assert_eq!(euler(&k), 1);
    }
    for n in 1..=5 {
        let j = face_poset_multiplihedron(n).unwrap();
        assert_eq!(
            j.count_at_rank(0),
            enumerate_binary_painted(n).unwrap().len()
        );
        assert_eq!(euler(&j), 1);
    }
    let j4 = face_poset_multiplihedron(4).unwrap();
    let f: Vec<usize> = (0..=3).map(|r| j4.count_at_rank(r)).collect();
    assert_eq!(f, [21, 32, 13, 1]);
}

#[test]
fn quotient_is_monotone_and_onto() {
    for n in 2..=4 {
        let j = face_poset_multiplihedron(n).unwrap();
        let ck = face_poset_composihedron(n).unwrap();
        let map = quotient_to_composihedron(n).unwrap();
        let mut hit = vec![false; ck.len()];
        for &m in &map {
            hit[m] = true;
        }
        assert!(hit.iter().all(|&h| h), "n = {n}");
        for &(a, b) in j.covers() {
            assert!(ck.leq(map[a], map[b]), "n = {n}");
        }
    }
}

#[test]
fn facets_of_small_cases() {
    let two = face_poset_composihedron(2).unwrap();
    for f in facet_trees(2).unwrap() {
        assert_eq!(facet_subposet(2, &f).unwrap().len(), 1);
    }
    assert_eq!(two.len(), 3);
    let u = FacetTree::upper(vec![2, 2]).unwrap();
    assert!(matches!(
        facet_subposet(3, &u),
        Err(Error::ForeignFacet { .. })
    ));
    let lower = FacetTree::lower(4, 3).unwrap();
    let sub = facet_subposet(4, &lower).unwrap();
    let pentagon = face_poset_composihedron(3).unwrap();
    assert!(poset_isomorphic(&sub, &pentagon).is_some());
    let square = face_poset_associahedron(4).unwrap();
    assert!(poset_isomorphic(&sub, &square).is_some());
}
