use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::rational::{format_rational, parse_rational};
use crate::algebra::{BiPoly, Monomial, Rational, UniPoly};

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        // lexicographic (i, j) key order keeps the text stable
        let ordered: BTreeMap<(u32, u32), &Rational> = self.terms().map(|(m, c)| ((m.x, m.y), c)).collect();
        let mut map = s.serialize_map(Some(ordered.len()))?;
        for ((i, j), c) in ordered {
            map.serialize_entry(&format!("{i},{j}"), &format_rational(c))?;
        }
        map.end()
    }
}

fn parse_exponent<E: de::Error>(text: &str, key: &str) -> Result<u32, E> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(E::custom(format!("malformed exponent key {key:?}")));
    }
    text.parse::<u32>()
        .map_err(|_| E::custom(format!("exponent out of range in key {key:?}")))
}

fn parse_coefficient<E: de::Error>(text: &str, key: &str) -> Result<Rational, E> {
    parse_rational(text).map_err(|e| E::custom(format!("coefficient of {key:?}: {e}")))
}

struct BiPolyVisitor;

impl<'de> Visitor<'de> for BiPolyVisitor {
    type Value = BiPoly;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a map from \"i,j\" exponent keys to rational strings")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<BiPoly, A::Error> {
        let mut seen = std::collections::BTreeSet::new();
        let mut p = BiPoly::zero();
        while let Some((key, value)) = access.next_entry::<String, String>()? {
            let (i, j) = key
                .split_once(',')
                .ok_or_else(|| de::Error::custom(format!("malformed exponent key {key:?}")))?;
            let m = Monomial::new(parse_exponent(i, &key)?, parse_exponent(j, &key)?);
            if !seen.insert((m.x, m.y)) {
                return Err(de::Error::custom(format!("duplicate exponent key {key:?}")));
            }
            p.add_term(m, parse_coefficient(&value, &key)?);
        }
        Ok(p)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_map(BiPolyVisitor)
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let nonzero: Vec<(usize, &Rational)> = self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .collect();
        let mut map = s.serialize_map(Some(nonzero.len()))?;
        for (k, c) in nonzero {
            map.serialize_entry(&k.to_string(), &format_rational(c))?;
        }
        map.end()
    }
}

struct UniPolyVisitor;

impl<'de> Visitor<'de> for UniPolyVisitor {
    type Value = UniPoly;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a map from exponent keys to rational strings")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<UniPoly, A::Error> {
        let mut coeffs: BTreeMap<u32, Rational> = BTreeMap::new();
        while let Some((key, value)) = access.next_entry::<String, String>()? {
            let k = parse_exponent(&key, &key)?;
            if k as usize > crate::algebra::bipoly::MAX_TERMS {
                return Err(de::Error::custom(format!("exponent {k} exceeds the size cap")));
            }
            if coeffs.insert(k, parse_coefficient(&value, &key)?).is_some() {
                return Err(de::Error::custom(format!("duplicate exponent key {key:?}")));
            }
        }
        let mut p = UniPoly::zero();
        for (k, c) in coeffs {
            p = p + UniPoly::monomial(c, k as usize);
        }
        Ok(p)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_map(UniPolyVisitor)
    }
}
