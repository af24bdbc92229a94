//! Text exports: polymake `POINTS` blocks and lossless JSON.
//!
//! In JSON every rational is an object `{"num": "<int>", "den": "<int>"}` with
//! decimal integer strings and a positive, reduced denominator.

use std::fmt::Write;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::realization::VRep;

pub mod rational {
    use num::{BigInt, BigRational, Zero};
    use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    pub(crate) struct Repr {
        num: String,
        den: String,
    }

    pub(crate) fn to_repr(q: &BigRational) -> Repr {
        Repr {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }

    pub(crate) fn from_repr<E: de::Error>(r: Repr) -> Result<BigRational, E> {
        let num: BigInt = r.num.parse().map_err(E::custom)?;
        let den: BigInt = r.den.parse().map_err(E::custom)?;
        if den.is_zero() {
            return Err(E::custom("zero denominator"));
        }
        Ok(BigRational::new(num, den))
    }

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        to_repr(q).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        from_repr(Repr::deserialize(d)?)
    }
}

pub mod rational_vec {
    use num::BigRational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::rational::{from_repr, to_repr, Repr};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(to_repr).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        Vec::<Repr>::deserialize(d)?
            .into_iter()
            .map(from_repr)
            .collect()
    }
}

/// A polymake `POINTS` section: one row per vertex, homogenizing `1` first,
/// entries separated by single spaces, every line newline-terminated.
pub fn export_polymake(v: &VRep) -> Result<String> {
    if v.vertices.is_empty() {
        return Err(Error::EmptyExport);
    }
    let mut out = String::from("POINTS\n");
    for p in v.points() {
        out.push('1');
        for c in &p.coords {
            write!(out, " {c}").expect("writing to a String");
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn export_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("exported types serialize infallibly")
}

pub fn parse_json<T: DeserializeOwned>(text: &str) -> serde_json::Result<T> {
    serde_json::from_str(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::{composihedron_vrep, Point, WeightVector};

    #[test]
    fn polymake_small() {
        let v = composihedron_vrep(2, &WeightVector::units(2)).unwrap();
        let text = export_polymake(&v).unwrap();
        let mut rows: Vec<&str> = text.lines().skip(1).collect();
        rows.sort();
        assert_eq!(text.lines().next(), Some("POINTS"));
        assert_eq!(rows, vec!["1 0", "1 1"]);
        assert!(text.ends_with('\n'));
        let empty = VRep::from_points(2, vec![]).unwrap();
        assert!(matches!(export_polymake(&empty), Err(Error::EmptyExport)));
    }

    #[test]
    fn rationals_in_json() {
        let p = Point::new(vec![
            num::BigRational::new(3.into(), 6.into()),
            num::BigRational::from_integer((-4).into()),
        ]);
        let json = export_json(&p);
        assert!(json.contains("\"num\": \"1\""));
        assert!(json.contains("\"den\": \"2\""));
        assert_eq!(parse_json::<Point>(&json).unwrap(), p);
        assert!(parse_json::<Point>(r#"{"coords":[{"num":"1","den":"0"}]}"#).is_err());
    }
}
