use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::params::{ParamBits, ParamLayout};
use crate::f2poly::{Presentation, ReducedRing};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Field {
    Real,
    Complex,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Real => "real",
            Field::Complex => "complex",
        })
    }
}

/// Symbolic name of a space from one of the supported families.
///
/// The text form is `family:params`, for example `milnor-real:4,3`,
/// `quot-real-z2:5,3@0010000`, `gpps-cs:5,3;2,3`, `gpps-tensor:5,3;rp:4` or
/// `gpps-refl:real,5,3;(3,2)(4,1)`. Parameter bits after `@` are optional and
/// default to all zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum SpaceDescriptor {
    MilnorReal {
        r: u32,
        s: u32,
    },
    MilnorComplex {
        r: u32,
        s: u32,
    },
    Rp {
        n: u32,
    },
    Cp {
        n: u32,
    },
    QuotientRealZ2 {
        r: u32,
        s: u32,
        #[serde(default, skip_serializing_if = "ParamBits::is_empty")]
        params: ParamBits,
    },
    QuotientComplexZ2 {
        r: u32,
        s: u32,
        #[serde(default, skip_serializing_if = "ParamBits::is_empty")]
        params: ParamBits,
    },
    QuotientRealS1 {
        r: u32,
        s: u32,
        #[serde(default, skip_serializing_if = "ParamBits::is_empty")]
        params: ParamBits,
    },
    ProjectiveProductSpace {
        ns: Vec<u32>,
    },
    GppsTensor {
        r: u32,
        s: u32,
        factor: Box<SpaceDescriptor>,
    },
    GppsComplexSpheres {
        r: u32,
        s: u32,
        ns: Vec<u32>,
    },
    GppsReflection {
        field: Field,
        r: u32,
        s: u32,
        spheres: Vec<(u32, u32)>,
        #[serde(default, skip_serializing_if = "ParamBits::is_empty")]
        params: ParamBits,
    },
}

/// Group acting freely on a Milnor manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Group {
    Z2,
    S1,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Z2 => "z2",
            Group::S1 => "s1",
        })
    }
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "z2" => Ok(Group::Z2),
            "s1" => Ok(Group::S1),
            _ => Err(Error::Descriptor {
                input: s.to_string(),
                reason: "group must be z2 or s1".into(),
            }),
        }
    }
}

impl SpaceDescriptor {
    pub fn family_name(&self) -> &'static str {
        use SpaceDescriptor::*;
        match self {
            MilnorReal { .. } => "milnor-real",
            MilnorComplex { .. } => "milnor-complex",
            Rp { .. } => "rp",
            Cp { .. } => "cp",
            QuotientRealZ2 { .. } => "quot-real-z2",
            QuotientComplexZ2 { .. } => "quot-complex-z2",
            QuotientRealS1 { .. } => "quot-real-s1",
            ProjectiveProductSpace { .. } => "pps",
            GppsTensor { .. } => "gpps-tensor",
            GppsComplexSpheres { .. } => "gpps-cs",
            GppsReflection { .. } => "gpps-refl",
        }
    }

    pub fn presentation(&self) -> Result<Presentation> {
        use SpaceDescriptor::*;
        match self {
            MilnorReal { r, s } => super::milnor_real(*r, *s),
            MilnorComplex { r, s } => super::milnor_complex(*r, *s),
            Rp { n } => super::rp(*n),
            Cp { n } => super::cp(*n),
            QuotientRealZ2 { r, s, params } => super::quotient_real_z2(*r, *s, params),
            QuotientComplexZ2 { r, s, params } => super::quotient_complex_z2(*r, *s, params),
            QuotientRealS1 { r, s, params } => super::quotient_real_s1(*r, *s, params),
            ProjectiveProductSpace { ns } => super::pps(ns),
            GppsTensor { r, s, factor } => super::gpps_tensor(*r, *s, &factor.presentation()?),
            GppsComplexSpheres { r, s, ns } => super::gpps_complex_spheres(*r, *s, ns),
            GppsReflection {
                field,
                r,
                s,
                spheres,
                params,
            } => super::gpps_reflection(*field, *r, *s, spheres, params),
        }
    }

    /// The presentation completed at its formal dimension.
    pub fn ring(&self) -> Result<ReducedRing> {
        ReducedRing::new(&self.presentation()?)
    }

    /// Layout of the free parameter bits, for the quotient families.
    pub fn param_layout(&self) -> Option<ParamLayout> {
        use SpaceDescriptor::*;
        match self {
            QuotientRealZ2 { s, .. } | QuotientComplexZ2 { s, .. } | GppsReflection { s, .. } => {
                Some(ParamLayout::z2(*s))
            }
            QuotientRealS1 { .. } => Some(ParamLayout::S1),
            _ => None,
        }
    }

    pub fn params(&self) -> Option<&ParamBits> {
        use SpaceDescriptor::*;
        match self {
            QuotientRealZ2 { params, .. }
            | QuotientComplexZ2 { params, .. }
            | QuotientRealS1 { params, .. }
            | GppsReflection { params, .. } => Some(params),
            _ => None,
        }
    }

    /// The same space with different parameter bits.
    pub fn with_params(&self, bits: ParamBits) -> Result<SpaceDescriptor> {
        use SpaceDescriptor::*;
        let mut d = self.clone();
        match &mut d {
            QuotientRealZ2 { params, .. }
            | QuotientComplexZ2 { params, .. }
            | QuotientRealS1 { params, .. }
            | GppsReflection { params, .. } => *params = bits,
            _ => {
                return Err(Error::param(
                    self.family_name(),
                    "this family has no free parameters",
                ))
            }
        }
        Ok(d)
    }

    /// The quotient by a free action of `group`, as a descriptor.
    ///
    /// Free involutions exist on `FH_{r,s}` (`1 < s < r`) exactly when `r` and
    /// `s` are both odd; free circle actions on `RH_{r,s}` (`1 ≤ s ≤ r`)
    /// likewise.
    pub fn quotient(&self, group: Group, params: ParamBits) -> Result<SpaceDescriptor> {
        use SpaceDescriptor::*;
        let refuse = |reason: String| Err(Error::param("quotient", reason));
        let (r, s, field) = match *self {
            MilnorReal { r, s } => (r, s, Field::Real),
            MilnorComplex { r, s } => (r, s, Field::Complex),
            _ => {
                return refuse(format!(
                    "free {group} actions are only catalogued for Milnor manifolds, not {}",
                    self.family_name()
                ))
            }
        };
        if r % 2 == 0 || s % 2 == 0 {
            let what = match group {
                Group::Z2 => format!("{}H_{{r,s}} admits a free involution", field_letter(field)),
                Group::S1 => "S^1 acts freely on RH_{r,s}".to_string(),
            };
            return refuse(format!(
                "{what} if and only if both r and s are odd; got r={r}, s={s}"
            ));
        }
        let q = match (group, field) {
            (Group::Z2, Field::Real) => QuotientRealZ2 { r, s, params },
            (Group::Z2, Field::Complex) => QuotientComplexZ2 { r, s, params },
            (Group::S1, Field::Real) => QuotientRealS1 { r, s, params },
            (Group::S1, Field::Complex) => {
                return refuse("no free circle action is catalogued on CH_{r,s}".into())
            }
        };
        // Surface parity and range errors now rather than at first use.
        q.presentation()?;
        Ok(q)
    }
}

fn field_letter(f: Field) -> &'static str {
    match f {
        Field::Real => "R",
        Field::Complex => "C",
    }
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn with_bits(f: &mut fmt::Formatter<'_>, params: &ParamBits) -> fmt::Result {
    if params.is_empty() {
        Ok(())
    } else {
        write!(f, "@{params}")
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SpaceDescriptor::*;
        let name = self.family_name();
        match self {
            MilnorReal { r, s } | MilnorComplex { r, s } => write!(f, "{name}:{r},{s}"),
            Rp { n } | Cp { n } => write!(f, "{name}:{n}"),
            QuotientRealZ2 { r, s, params }
            | QuotientComplexZ2 { r, s, params }
            | QuotientRealS1 { r, s, params } => {
                write!(f, "{name}:{r},{s}")?;
                with_bits(f, params)
            }
            ProjectiveProductSpace { ns } => write!(f, "{name}:{}", join(ns)),
            GppsTensor { r, s, factor } => write!(f, "{name}:{r},{s};{factor}"),
            GppsComplexSpheres { r, s, ns } => write!(f, "{name}:{r},{s};{}", join(ns)),
            GppsReflection {
                field,
                r,
                s,
                spheres,
                params,
            } => {
                write!(f, "{name}:{field},{r},{s};")?;
                for (n, p) in spheres {
                    write!(f, "({n},{p})")?;
                }
                with_bits(f, params)
            }
        }
    }
}

struct Parser<'a> {
    input: &'a str,
}

impl Parser<'_> {
    fn fail<T>(&self, reason: impl Into<String>) -> Result<T> {
        Err(Error::Descriptor {
            input: self.input.to_string(),
            reason: reason.into(),
        })
    }

    fn ints(&self, s: &str) -> Result<Vec<u32>> {
        if s.trim().is_empty() {
            return Ok(Vec::new());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .or_else(|_| self.fail(format!("`{t}` is not a non-negative integer")))
            })
            .collect()
    }

    fn exactly<const N: usize>(&self, s: &str) -> Result<[u32; N]> {
        let v = self.ints(s)?;
        v.try_into()
            .or_else(|v: Vec<u32>| self.fail(format!("expected {N} integers, got {}", v.len())))
    }

    fn pairs(&self, s: &str) -> Result<Vec<(u32, u32)>> {
        let mut out = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return self.fail("sphere pairs must look like (n,p)(n,p)");
            };
            let Some(end) = body.find(')') else {
                return self.fail("unclosed sphere pair");
            };
            let [n, p] = self.exactly::<2>(&body[..end])?;
            out.push((n, p));
            rest = body[end + 1..].trim_start();
        }
        Ok(out)
    }

    fn parse(&self) -> Result<SpaceDescriptor> {
        use SpaceDescriptor::*;
        let Some((family, body)) = self.input.trim().split_once(':') else {
            return self.fail("expected `family:parameters`");
        };
        let family = family.trim();
        let split_bits = |b: &str| -> Result<(String, ParamBits)> {
            match b.rsplit_once('@') {
                Some((head, bits)) => Ok((head.to_string(), ParamBits::parse(bits.trim())?)),
                None => Ok((b.to_string(), ParamBits::default())),
            }
        };
        let d = match family {
            "milnor-real" => {
                let [r, s] = self.exactly(body)?;
                MilnorReal { r, s }
            }
            "milnor-complex" => {
                let [r, s] = self.exactly(body)?;
                MilnorComplex { r, s }
            }
            "rp" => Rp {
                n: self.exactly::<1>(body)?[0],
            },
            "cp" => Cp {
                n: self.exactly::<1>(body)?[0],
            },
            "quot-real-z2" | "quot-complex-z2" | "quot-real-s1" => {
                let (head, params) = split_bits(body)?;
                let [r, s] = self.exactly(&head)?;
                match family {
                    "quot-real-z2" => QuotientRealZ2 { r, s, params },
                    "quot-complex-z2" => QuotientComplexZ2 { r, s, params },
                    _ => QuotientRealS1 { r, s, params },
                }
            }
            "pps" => ProjectiveProductSpace {
                ns: self.ints(body)?,
            },
            "gpps-tensor" => {
                let Some((rs, factor)) = body.split_once(';') else {
                    return self.fail("expected `gpps-tensor:r,s;factor-descriptor`");
                };
                let [r, s] = self.exactly(rs)?;
                let factor = Box::new(factor.parse()?);
                GppsTensor { r, s, factor }
            }
            "gpps-cs" => {
                let Some((rs, ns)) = body.split_once(';') else {
                    return self.fail("expected `gpps-cs:r,s;n1,n2,…`");
                };
                let [r, s] = self.exactly(rs)?;
                GppsComplexSpheres {
                    r,
                    s,
                    ns: self.ints(ns)?,
                }
            }
            "gpps-refl" => {
                let (head, params) = split_bits(body)?;
                let (lead, spheres) = head.split_once(';').unwrap_or((&head, ""));
                let Some((field, rs)) = lead.split_once(',') else {
                    return self.fail("expected `gpps-refl:real|complex,r,s;(n,p)…`");
                };
                let field = match field.trim() {
                    "real" => Field::Real,
                    "complex" => Field::Complex,
                    other => return self.fail(format!("unknown field `{other}`")),
                };
                let [r, s] = self.exactly(rs)?;
                GppsReflection {
                    field,
                    r,
                    s,
                    spheres: self.pairs(spheres)?,
                    params,
                }
            }
            other => return self.fail(format!("unknown family `{other}`")),
        };
        Ok(d)
    }
}

impl FromStr for SpaceDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser { input: s }.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_round_trips() {
        for s in [
            "milnor-real:4,3",
            "milnor-complex:1,1",
            "rp:3",
            "cp:2",
            "quot-real-z2:5,3",
            "quot-complex-z2:5,3@0010000",
            "quot-real-s1:5,3@01",
            "pps:2,3",
            "gpps-tensor:5,3;rp:4",
            "gpps-cs:5,3;2,3",
            "gpps-refl:real,5,3;(3,2)(4,1)",
            "gpps-refl:complex,7,3;(3,2)@1010101",
        ] {
            let d: SpaceDescriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
            let json = serde_json::to_string(&d).unwrap();
            let back: SpaceDescriptor = serde_json::from_str(&json).unwrap();
            assert_eq!(back, d);
        }
    }

    #[test]
    fn malformed_descriptors() {
        for s in [
            "milnor-real",
            "milnor-real:4",
            "milnor-real:4,x",
            "klein:1",
            "gpps-refl:real,5,3;(3,2",
            "gpps-refl:quaternion,5,3;",
            "quot-real-z2:5,3@01x",
        ] {
            assert!(s.parse::<SpaceDescriptor>().is_err(), "{s}");
        }
    }

    #[test]
    fn json_shape() {
        let d: SpaceDescriptor = "milnor-real:4,3".parse().unwrap();
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"family":"milnor-real","r":4,"s":3}"#
        );
    }

    #[test]
    fn quotient_refuses_even_parameters() {
        let d = SpaceDescriptor::MilnorReal { r: 4, s: 3 };
        let err = d.quotient(Group::Z2, ParamBits::default()).unwrap_err();
        assert!(err.to_string().contains("if and only if"));
        let d = SpaceDescriptor::MilnorReal { r: 5, s: 3 };
        assert_eq!(
            d.quotient(Group::S1, ParamBits::default())
                .unwrap()
                .to_string(),
            "quot-real-s1:5,3"
        );
    }
}
