//! JSON documents for every domain type.
//!
//! Top-level documents carry a `"kind"` tag and a `"field"` object. Scalars are
//! always strings (`"3/4"`, `"-2"`, `"4 mod 5"`); matrices and tensors are nested
//! row-major arrays. Output is canonical: keys sorted, pretty-printed.

use serde_json::{json, Map, Value};

use crate::algebra::{AntiPreLieAlgebra, LieTable, MultTable};
use crate::cohomology::{Cochain2, CohomologySpaces};
use crate::deformation::{TruncatedDeformation, TruncatedIsomorphism};
use crate::dendriform::AntiLDendriform;
use crate::error::{Error, Result};
use crate::extension::AbelianExtension;
use crate::linalg::{Matrix, Tensor3};
use crate::report::Report;
use crate::representation::Representation;
use crate::scalar::{FieldKind, Scalar};

pub const KIND_ALGEBRA: &str = "anti-pre-lie";
pub const KIND_REPRESENTATION: &str = "representation";
pub const KIND_COCHAIN2: &str = "cochain2";
pub const KIND_DENDRIFORM: &str = "dendriform";
pub const KIND_O_OPERATOR: &str = "o-operator";
pub const KIND_BILINEAR_FORM: &str = "bilinear-form";
pub const KIND_DEFORMATION: &str = "deformation";
pub const KIND_ISOMORPHISM: &str = "isomorphism";
pub const KIND_EXTENSION: &str = "extension";

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn field_to_value(f: FieldKind) -> Value {
    match f {
        FieldKind::Rational => json!({ "type": "rational" }),
        FieldKind::Prime(p) => json!({ "type": "prime", "p": p }),
    }
}

pub fn field_from_value(v: &Value) -> Result<FieldKind> {
    match v.get("type").and_then(Value::as_str) {
        Some("rational") => Ok(FieldKind::Rational),
        Some("prime") => {
            let p = v.get("p").and_then(Value::as_u64).ok_or_else(|| parse_err("prime field without \"p\""))?;
            u32::try_from(p).map(FieldKind::Prime).map_err(|_| parse_err("prime out of range"))
        }
        _ => Err(parse_err("field must be {\"type\":\"rational\"} or {\"type\":\"prime\",\"p\":...}")),
    }
}

/// The `"field"` of a top-level document.
pub fn document_field(doc: &Value) -> Result<FieldKind> {
    field_from_value(doc.get("field").ok_or_else(|| parse_err("document has no \"field\""))?)
}

pub fn document_kind(doc: &Value) -> Result<&str> {
    doc.get("kind").and_then(Value::as_str).ok_or_else(|| parse_err("document has no \"kind\""))
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing \"{key}\"")))
}

fn get_usize(v: &Value, key: &str) -> Result<usize> {
    get(v, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| parse_err(format!("\"{key}\" must be a non-negative integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("{what} must be an array")))
}

pub fn scalar_to_value<S: Scalar>(x: &S) -> Value {
    Value::String(x.to_string())
}

pub fn scalar_from_value<S: Scalar>(v: &Value) -> Result<S> {
    let s = v.as_str().ok_or_else(|| parse_err(format!("scalar must be a string, got {v}")))?;
    S::parse_scalar(s)
}

pub fn vector_to_value<S: Scalar>(v: &[S]) -> Value {
    Value::Array(v.iter().map(scalar_to_value).collect())
}

pub fn vector_from_value<S: Scalar>(v: &Value, len: usize) -> Result<Vec<S>> {
    let arr = as_array(v, "vector")?;
    if arr.len() != len {
        return Err(Error::Dimension(format!("expected {len} entries, got {}", arr.len())));
    }
    arr.iter().map(scalar_from_value).collect()
}

pub fn matrix_to_value<S: Scalar>(m: &Matrix<S>) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_to_value(m.row(i))).collect())
}

pub fn matrix_from_value<S: Scalar>(v: &Value, rows: usize, cols: usize) -> Result<Matrix<S>> {
    let arr = as_array(v, "matrix")?;
    if arr.len() != rows {
        return Err(Error::Dimension(format!("expected {rows} rows, got {}", arr.len())));
    }
    let data = arr.iter().map(|r| vector_from_value(r, cols)).collect::<Result<Vec<_>>>()?;
    Matrix::from_vec(rows, cols, data.concat())
}

/// A matrix whose shape is read from the array itself.
pub fn matrix_from_value_any<S: Scalar>(v: &Value) -> Result<Matrix<S>> {
    let arr = as_array(v, "matrix")?;
    let cols = match arr.first() {
        Some(r) => as_array(r, "matrix row")?.len(),
        None => 0,
    };
    matrix_from_value(v, arr.len(), cols)
}

pub fn tensor_to_value<S: Scalar>(t: &Tensor3<S>) -> Value {
    let (a, b, _) = t.dims();
    Value::Array((0..a).map(|i| Value::Array((0..b).map(|j| vector_to_value(t.fiber(i, j))).collect())).collect())
}

pub fn tensor_from_value<S: Scalar>(v: &Value, dims: (usize, usize, usize)) -> Result<Tensor3<S>> {
    let arr = as_array(v, "tensor")?;
    if arr.len() != dims.0 {
        return Err(Error::Dimension(format!("expected {} outer entries, got {}", dims.0, arr.len())));
    }
    let mut data = Vec::with_capacity(dims.0 * dims.1 * dims.2);
    for plane in arr {
        let rows = as_array(plane, "tensor plane")?;
        if rows.len() != dims.1 {
            return Err(Error::Dimension(format!("expected {} middle entries, got {}", dims.1, rows.len())));
        }
        for r in rows {
            data.extend(vector_from_value::<S>(r, dims.2)?);
        }
    }
    Tensor3::from_vec(dims, data)
}

/// Serialization of one domain type as the body of a tagged document.
pub trait Document: Sized {
    const KIND: &'static str;
    type Scalar: Scalar;
    fn to_body(&self) -> Map<String, Value>;
    fn from_body(v: &Value) -> Result<Self>;
}

/// Body plus `"kind"` and `"field"`.
pub fn to_document<D: Document>(d: &D) -> Value {
    let mut body = d.to_body();
    body.insert("kind".into(), Value::String(D::KIND.into()));
    body.insert("field".into(), field_to_value(D::Scalar::field()));
    Value::Object(body)
}

/// Checks the tag and the field, then parses the body.
pub fn from_document<D: Document>(doc: &Value) -> Result<D> {
    let kind = document_kind(doc)?;
    if kind != D::KIND {
        return Err(parse_err(format!("expected a \"{}\" document, got \"{kind}\"", D::KIND)));
    }
    check_field::<D::Scalar>(doc)?;
    D::from_body(doc)
}

/// Field check for nested documents; a missing field is accepted there.
fn check_field<S: Scalar>(doc: &Value) -> Result<()> {
    if let Some(f) = doc.get("field") {
        let found = field_from_value(f)?;
        if found != S::field() {
            return Err(Error::FieldMismatch { expected: S::field(), found });
        }
    }
    Ok(())
}

fn nested<D: Document>(v: &Value) -> Result<D> {
    if let Some(kind) = v.get("kind").and_then(Value::as_str) {
        if kind != D::KIND {
            return Err(parse_err(format!("expected a nested \"{}\" document, got \"{kind}\"", D::KIND)));
        }
    }
    check_field::<D::Scalar>(v)?;
    D::from_body(v)
}

pub fn print(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn parse(text: &str) -> Result<Value> {
    Ok(serde_json::from_str(text)?)
}

fn object(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Tagged like an algebra but with no axiom check, so failing tables can be read and reported.
impl<S: Scalar> Document for MultTable<S> {
    const KIND: &'static str = KIND_ALGEBRA;
    type Scalar = S;

    fn to_body(&self) -> Map<String, Value> {
        object(vec![("dim", json!(self.dim())), ("mult", tensor_to_value(self.constants()))])
    }

    fn from_body(v: &Value) -> Result<Self> {
        let n = get_usize(v, "dim")?;
        MultTable::new(tensor_from_value(get(v, "mult")?, (n, n, n))?)
    }
}

impl<S: Scalar> Document for AntiPreLieAlgebra<S> {
    const KIND: &'static str = KIND_ALGEBRA;
    type Scalar = S;

    fn to_body(&self) -> Map<String, Value> {
        self.table().to_body()
    }

    fn from_body(v: &Value) -> Result<Self> {
        AntiPreLieAlgebra::new(MultTable::from_body(v)?)
    }
}

impl<S: Scalar> Document for Representation<S> {
    const KIND: &'static str = KIND_REPRESENTATION;
    type Scalar = S;

    fn to_body(&self) -> Map<String, Value> {
        let mats = |ms: &[Matrix<S>]| Value::Array(ms.iter().map(matrix_to_value).collect());
        object(vec![
            ("dim_a", json!(self.dim_a())),
            ("dim_v", json!(self.dim_v())),
            ("rho", mats(self.rho())),
            ("mu", mats(self.mu())),
        ])
    }

    fn from_body(v: &Value) -> Result<Self> {
        let (n, m) = (get_usize(v, "dim_a")?, get_usize(v, "dim_v")?);
        let mats = |key: &str| -> Result<Vec<Matrix<S>>> {
            let arr = as_array(get(v, key)?, key)?;
            if arr.len() != n {
                return Err(Error::Dimension(format!("\"{key}\" has {} matrices, expected {n}", arr.len())));
            }
            arr.iter().map(|x| matrix_from_value(x, m, m)).collect()
        };
        Representation::new(m, mats("rho")?, mats("mu")?)
    }
}

impl<S: Scalar> Document for Cochain2<S> {
    const KIND: &'static str = KIND_COCHAIN2;
    type Scalar = S;

    fn to_body(&self) -> Map<String, Value> {
        object(vec![
            ("dim_a", json!(self.dim_a())),
            ("dim_v", json!(self.dim_v())),
            ("values", tensor_to_value(&self.values)),
        ])
    }

    fn from_body(v: &Value) -> Result<Self> {
        let (n, m) = (get_usize(v, "dim_a")?, get_usize(v, "dim_v")?);
        Cochain2::new(tensor_from_value(get(v, "values")?, (n, n, m))?)
    }
}

impl<S: Scalar> Document for AntiLDendriform<S> {
    const KIND: &'static str = KIND_DENDRIFORM;
    type Scalar = S;

    fn to_body(&self) -> Map<String, Value> {
        object(vec![
            ("dim", json!(self.dim())),
            ("right", tensor_to_value(self.right().constants())),
            ("left", tensor_to_value(self.left().constants())),
        ])
    }

    fn from_body(v: &Value) -> Result<Self> {
        let n = get_usize(v, "dim")?;
        let t = |key| -> Result<MultTable<S>> { MultTable::new(tensor_from_value(get(v, key)?, (n, n, n))?) };
        AntiLDendriform::new(t("right")?, t("left")?)
    }
}

/// An O-operator candidate `T: V → A` (shape `n x m`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OOperatorDoc<S>(pub Matrix<S>);

impl<S: Scalar> Document for OOperatorDoc<S> {
    const KIND: &'static str = KIND_O_OPERATOR;
    type Scalar = S;

    fn to_body(&self) -> Map<String, Value> {
        object(vec![("matrix", matrix_to_value(&self.0))])
    }

    fn from_body(v: &Value) -> Result<Self> {
        matrix_from_value_any(get(v, "matrix")?).map(OOperatorDoc)
    }
}

/// The Gram matrix of a bilinear form, not yet validated against an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearFormDoc<S>(pub Matrix<S>);

impl<S: Scalar> Document for BilinearFormDoc<S> {
    const KIND: &'static str = KIND_BILINEAR_FORM;
    type Scalar = S;

    fn to_body(&self) -> Map<String, Value> {
        object(vec![("matrix", matrix_to_value(&self.0))])
    }

    fn from_body(v: &Value) -> Result<Self> {
        let m = matrix_from_value_any(get(v, "matrix")?)?;
        if !m.is_square() {
            return Err(Error::Dimension("bilinear form matrix must be square".into()));
        }
        Ok(BilinearFormDoc(m))
    }
}

impl<S: Scalar> Document for TruncatedDeformation<S> {
    const KIND: &'static str = KIND_DEFORMATION;
    type Scalar = S;

    fn to_body(&self) -> Map<String, Value> {
        object(vec![
            ("base", to_document(self.base())),
            ("order", json!(self.order())),
            ("terms", Value::Array(self.terms().iter().map(|t| tensor_to_value(t.constants())).collect())),
        ])
    }

    fn from_body(v: &Value) -> Result<Self> {
        let base: AntiPreLieAlgebra<S> = nested(get(v, "base")?)?;
        let order = get_usize(v, "order")?;
        let n = base.dim();
        let terms = as_array(get(v, "terms")?, "terms")?;
        if terms.len() != order {
            return Err(Error::Dimension(format!("order {order} but {} terms", terms.len())));
        }
        let terms = terms
            .iter()
            .map(|t| MultTable::new(tensor_from_value(t, (n, n, n))?))
            .collect::<Result<Vec<_>>>()?;
        TruncatedDeformation::new(base, terms)
    }
}

impl<S: Scalar> Document for TruncatedIsomorphism<S> {
    const KIND: &'static str = KIND_ISOMORPHISM;
    type Scalar = S;

    fn to_body(&self) -> Map<String, Value> {
        object(vec![
            ("dim", json!(self.dim())),
            ("order", json!(self.order())),
            ("phis", Value::Array(self.phis().iter().map(matrix_to_value).collect())),
        ])
    }

    fn from_body(v: &Value) -> Result<Self> {
        let order = get_usize(v, "order")?;
        let phis = as_array(get(v, "phis")?, "phis")?;
        if phis.len() != order {
            return Err(Error::Dimension(format!("order {order} but {} maps", phis.len())));
        }
        let dim = match v.get("dim") {
            Some(_) => get_usize(v, "dim")?,
            None => match phis.first() {
                Some(p) => as_array(p, "matrix")?.len(),
                None => return Err(parse_err("an isomorphism of order 0 needs \"dim\"")),
            },
        };
        let phis = phis.iter().map(|p| matrix_from_value(p, dim, dim)).collect::<Result<Vec<_>>>()?;
        TruncatedIsomorphism::new(dim, phis)
    }
}

/// Either recipe for an extension document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionDoc<S> {
    /// Build from `(A, V, θ)`.
    Build { algebra: AntiPreLieAlgebra<S>, rep: Representation<S>, theta: Cochain2<S> },
    /// Supplied in arbitrary coordinates.
    External { total: AntiPreLieAlgebra<S>, iota: Matrix<S>, p: Matrix<S>, section: Matrix<S> },
}

impl<S: Scalar> ExtensionDoc<S> {
    /// The standard-coordinate form of an extension.
    pub fn from_extension(ext: &AbelianExtension<S>) -> Self {
        ExtensionDoc::External {
            total: ext.total().clone(),
            iota: ext.inclusion(),
            p: ext.projection(),
            section: ext.canonical_section(),
        }
    }

    pub fn resolve(self) -> Result<AbelianExtension<S>> {
        match self {
            ExtensionDoc::Build { algebra, rep, theta } => crate::extension::build_extension(&algebra, &rep, &theta),
            ExtensionDoc::External { total, iota, p, section } => {
                AbelianExtension::from_coordinates(total, &iota, &p, &section)
            }
        }
    }
}

impl<S: Scalar> Document for ExtensionDoc<S> {
    const KIND: &'static str = KIND_EXTENSION;
    type Scalar = S;

    fn to_body(&self) -> Map<String, Value> {
        match self {
            ExtensionDoc::Build { algebra, rep, theta } => object(vec![
                ("algebra", to_document(algebra)),
                ("rep", to_document(rep)),
                ("theta", to_document(theta)),
            ]),
            ExtensionDoc::External { total, iota, p, section } => object(vec![
                ("total", to_document(total)),
                ("iota", matrix_to_value(iota)),
                ("p", matrix_to_value(p)),
                ("section", matrix_to_value(section)),
            ]),
        }
    }

    fn from_body(v: &Value) -> Result<Self> {
        if v.get("theta").is_some() {
            Ok(ExtensionDoc::Build {
                algebra: nested(get(v, "algebra")?)?,
                rep: nested(get(v, "rep")?)?,
                theta: nested(get(v, "theta")?)?,
            })
        } else {
            let total: AntiPreLieAlgebra<S> = nested(get(v, "total")?)?;
            let size = total.dim();
            let iota = matrix_from_value_any(get(v, "iota")?)?;
            let p = matrix_from_value_any(get(v, "p")?)?;
            let section = matrix_from_value_any(get(v, "section")?)?;
            if iota.rows() != size || p.cols() != size {
                return Err(Error::Dimension(format!("iota and p must act on a {size}-dimensional total space")));
            }
            Ok(ExtensionDoc::External { total, iota, p, section })
        }
    }
}

pub fn report_to_value<S: Scalar>(r: &Report<S>) -> Value {
    json!({
        "passed": r.passed(),
        "violations": r.violations.iter().map(|v| json!({
            "identity": v.identity,
            "indices": v.indices,
            "residual": vector_to_value(&v.residual),
        })).collect::<Vec<_>>(),
    })
}

pub fn lie_to_value<S: Scalar>(lie: &LieTable<S>) -> Value {
    json!({
        "kind": "lie",
        "field": field_to_value(S::field()),
        "dim": lie.dim(),
        "bracket": tensor_to_value(lie.constants()),
    })
}

pub fn cohomology_to_value<S: Scalar>(c: &CohomologySpaces<S>) -> Value {
    let docs = |v: &[Cochain2<S>]| Value::Array(v.iter().map(to_document).collect());
    json!({
        "Z2": c.dim_z2(),
        "B2": c.dim_b2(),
        "H2": c.dim_h2(),
        "z2_basis": docs(&c.z2_basis),
        "b2_basis": docs(&c.b2_basis),
        "h2_representatives": docs(&c.h2_representatives),
    })
}
