//! `[{"coeff": "<decimal>", "exps": {"t": e, "z1": e, …}}, …]`, leading
//! term first. Exponent keys follow the variable order; absent keys mean 0.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LaurentPoly, Monomial, VarId};

struct Exps<'a>(&'a Monomial);

impl Serialize for Exps<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        for (v, e) in self.0.iter() {
            map.serialize_entry(&v.to_string(), &e)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct TermOut<'a> {
    coeff: String,
    exps: Exps<'a>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.num_terms()))?;
        for (m, c) in self.terms().rev() {
            seq.serialize_element(&TermOut {
                coeff: c.to_string(),
                exps: Exps(m),
            })?;
        }
        seq.end()
    }
}

#[derive(Deserialize)]
struct TermIn {
    coeff: String,
    #[serde(default)]
    exps: BTreeMap<String, i32>,
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: Vec<TermIn> = Vec::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for t in raw {
            let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            let pairs = t
                .exps
                .iter()
                .map(|(k, &e)| k.parse::<VarId>().map(|v| (v, e)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(D::Error::custom)?;
            p.add_term(c, Monomial::from_pairs(pairs));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_bytes() {
        let p = LaurentPoly::z(1) + LaurentPoly::t() * LaurentPoly::z(2) * 3 - LaurentPoly::one();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"[{"coeff":"3","exps":{"t":1,"z2":1}},{"coeff":"1","exps":{"z1":1}},{"coeff":"-1","exps":{}}]"#
        );
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(serde_json::from_str::<LaurentPoly>(r#"[{"coeff":"x","exps":{}}]"#).is_err());
        assert!(serde_json::from_str::<LaurentPoly>(r#"[{"coeff":"1","exps":{"w":1}}]"#).is_err());
    }
}
