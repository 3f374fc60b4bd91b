//! JSON input documents.
//!
//! Every place that takes a Young function, growth function, space or sample function
//! accepts either an inline object or a string path. Relative paths resolve against
//! the directory of the document that contains them.

use std::fmt;
use std::marker::PhantomData;
use std::path::{Path, PathBuf};

use serde::de::value::MapAccessDeserializer;
use serde::de::{self, DeserializeOwned, Visitor};
use serde::{Deserialize, Deserializer};
use serde_path_to_error::Segment;

use crate::geometry::SimpleRadialFunction;
use crate::growth::GrowthFunction;
use crate::inclusion::{Sample, SpaceParts, TheoremId};
use crate::norms::Variant;
use crate::young::YoungFunction;

use super::locate::{locate, render, Seg};
use super::CliError;

/// Inline value or a path to a document holding it.
#[derive(Debug, Clone, PartialEq)]
pub enum DocRef<T> {
    Inline(T),
    Path(PathBuf),
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for DocRef<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct RefVisitor<T>(PhantomData<T>);

        impl<'de, T: Deserialize<'de>> Visitor<'de> for RefVisitor<T> {
            type Value = DocRef<T>;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an inline object or a path string")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
                Ok(DocRef::Path(PathBuf::from(v)))
            }

            fn visit_map<A: de::MapAccess<'de>>(self, map: A) -> Result<Self::Value, A::Error> {
                T::deserialize(MapAccessDeserializer::new(map)).map(DocRef::Inline)
            }
        }

        deserializer.deserialize_any(RefVisitor(PhantomData))
    }
}

impl<T: DeserializeOwned> DocRef<T> {
    pub fn resolve(self, base: &Path) -> Result<(T, Option<PathBuf>), CliError> {
        match self {
            DocRef::Inline(v) => Ok((v, None)),
            DocRef::Path(p) => {
                let full = base.join(p);
                Ok((load(&full)?, Some(full)))
            }
        }
    }
}

/// Parses a JSON document, reporting line/column and the field path on failure.
pub fn parse<T: DeserializeOwned>(text: &str, origin: &str) -> Result<T, CliError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value: T = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let base: Vec<Seg> = e
            .path()
            .iter()
            .filter_map(|seg| match seg {
                Segment::Map { key } => Some(Seg::Key(key.clone())),
                Segment::Seq { index } => Some(Seg::Index(*index)),
                _ => None,
            })
            .collect();
        let inner = e.into_inner();
        let field = |path: &[Seg]| match render(path) {
            p if p.is_empty() => String::new(),
            p => format!(", field `{p}`"),
        };
        // serde_json appends "at line L column C" itself when the position is known
        if inner.line() > 0 {
            return CliError::Input(format!("{origin}{}: {inner}", field(&base)));
        }
        let (path, line) = locate(text, base, &inner.to_string());
        let at = line.map(|l| format!(" at line {l}")).unwrap_or_default();
        CliError::Input(format!("{origin}{}: {inner}{at}", field(&path)))
    })?;
    de.end()
        .map_err(|e| CliError::Input(format!("{origin}: trailing content: {e}")))?;
    Ok(value)
}

pub fn load<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse(&text, &path.display().to_string())
}

pub fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

/// A sample function document.
#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FunctionDoc {
    Simple {
        #[serde(default)]
        id: Option<String>,
        center: Vec<f64>,
        breakpoints: Vec<f64>,
        values: Vec<f64>,
    },
    /// `scale · χ_{B(center, radius)}`
    Characteristic {
        #[serde(default)]
        id: Option<String>,
        center: Vec<f64>,
        radius: f64,
        #[serde(default = "one")]
        scale: f64,
    },
}

fn one() -> f64 {
    1.0
}

impl FunctionDoc {
    pub fn id(&self) -> Option<&str> {
        match self {
            FunctionDoc::Simple { id, .. } | FunctionDoc::Characteristic { id, .. } => {
                id.as_deref()
            }
        }
    }

    pub fn build(&self) -> Result<SimpleRadialFunction, CliError> {
        Ok(match self {
            FunctionDoc::Simple {
                center,
                breakpoints,
                values,
                ..
            } => SimpleRadialFunction::new(center.clone(), breakpoints.clone(), values.clone())?,
            FunctionDoc::Characteristic {
                center,
                radius,
                scale,
                ..
            } => SimpleRadialFunction::characteristic(center.clone(), *radius)?.scaled(*scale)?,
        })
    }
}

/// Loads a function document; the id falls back to the file stem.
pub fn load_function(path: &Path) -> Result<(String, SimpleRadialFunction), CliError> {
    let doc: FunctionDoc = load(path)?;
    let id = doc.id().map(str::to_string).unwrap_or_else(|| stem(path));
    Ok((id, doc.build()?))
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "f".into())
}

/// `{"variant": ..., "young": ..., "growth": ..., "dimension": ...}`
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub variant: Variant,
    pub young: DocRef<YoungFunction>,
    pub growth: DocRef<GrowthFunction>,
    pub dimension: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SideDoc {
    pub young: DocRef<YoungFunction>,
    pub growth: DocRef<GrowthFunction>,
}

impl SideDoc {
    pub fn resolve(self, base: &Path) -> Result<SpaceParts, CliError> {
        Ok(SpaceParts {
            young: self.young.resolve(base)?.0,
            growth: self.growth.resolve(base)?.0,
        })
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampleDoc {
    pub id: String,
    pub function: DocRef<FunctionDoc>,
}

/// A theorem fixture document.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureDoc {
    #[serde(default)]
    pub theorem: Option<TheoremId>,
    #[serde(default = "one_dim")]
    pub dimension: usize,
    pub space1: SideDoc,
    pub space2: SideDoc,
    #[serde(default)]
    pub radii: Option<Vec<f64>>,
    /// Seeded random samples added to `samples`.
    #[serde(default = "default_random")]
    pub random_samples: usize,
    #[serde(default)]
    pub samples: Vec<SampleDoc>,
    #[serde(default)]
    pub override_hypotheses: bool,
    #[serde(default)]
    pub assumed_c: Option<f64>,
}

fn one_dim() -> usize {
    1
}

fn default_random() -> usize {
    crate::inclusion::BUILTIN_SAMPLES
}

pub fn resolve_samples(docs: Vec<SampleDoc>, base: &Path) -> Result<Vec<Sample>, CliError> {
    docs.into_iter()
        .map(|s| {
            let (doc, _) = s.function.resolve(base)?;
            Ok(Sample {
                id: s.id,
                function: doc.build()?,
            })
        })
        .collect()
}
