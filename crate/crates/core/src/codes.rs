//! Skew cyclic codes of length n over R = F_p + uF_p, viewed as left
//! R[x;θ]-submodules of R[x;θ]/⟨x^n − 1⟩.
//!
//! Every nonzero code has one of three generator forms:
//!
//! * `NonMonic`: C = ⟨u·ā⟩ with ā | x^n − 1 in F_p[x];
//! * `Monic`: C = ⟨g⟩ with g monic and x^n − 1 = k ∗ g;
//! * `Mixed`: C = ⟨g + u·p, u·ā⟩ with g a monic right divisor of x^n − 1,
//!   ā | x^n − 1, deg ā < deg g, ā | (g mod u) and ā | k′·p.
//!
//! Words are coefficient vectors in ascending order: `w[i]` multiplies x^i.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fp_poly::{factor_xn_minus_1, monic_divisors, FpPoly};
use crate::linalg::{nullspace, Echelon};
use crate::ring::{Automorphism, PrimeField, RingElement};
use crate::skew_poly::{index_to_poly, lift_divisors, SkewPoly};

/// A length-n vector over R.
pub type Word = Vec<RingElement>;

/// Default cap on closure size for [`canonicalize`].
pub const CLOSURE_LIMIT: u128 = 1 << 20;

/// Default cap on code size for brute-force enumeration.
pub const ENUMERATION_LIMIT: u128 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorForm {
    /// C = ⟨u·ā⟩
    NonMonic { abar: FpPoly },
    /// C = ⟨g⟩
    Monic { g: SkewPoly },
    /// C = ⟨g + u·pp, u·ā⟩
    Mixed { g: SkewPoly, pp: FpPoly, abar: FpPoly },
}

impl GeneratorForm {
    pub fn name(&self) -> &'static str {
        match self {
            GeneratorForm::NonMonic { .. } => "nonmonic",
            GeneratorForm::Monic { .. } => "monic",
            GeneratorForm::Mixed { .. } => "mixed",
        }
    }
}

/// A validated skew cyclic code.
#[derive(Clone)]
pub struct SkewCyclicCode {
    aut: Automorphism,
    n: usize,
    form: GeneratorForm,
    r: usize,
    t: Option<usize>,
    /// g + u·pp for the monic and mixed forms.
    generator: Option<SkewPoly>,
    /// k with x^n − 1 = k ∗ g.
    cofactor: Option<SkewPoly>,
    syndrome_table: HashMap<FpPoly, Vec<(usize, u32)>>,
}

/// Message space element, shaped by the generator form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Message {
    /// i(x), deg ≤ n − r − 1
    NonMonic { i: FpPoly },
    /// i(x) + u q(x), deg ≤ n − r − 1
    Monic { iq: SkewPoly },
    /// (i(x) + u q(x), j(x)), deg iq ≤ n − r − 1, deg j ≤ r − t − 1
    Mixed { iq: SkewPoly, j: FpPoly },
}

/// Syndrome pair of a received word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syndromes {
    pub s1: FpPoly,
    pub s2: FpPoly,
}

impl Syndromes {
    pub fn is_zero(&self) -> bool {
        self.s1.is_zero() && self.s2.is_zero()
    }
}

/// Intermediate values of division-based decoding:
/// v = (l₁ + u l₂) ∗ (g + u pp) + r₁ + u r₂ and r₂ = t·ā + s_err.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodingTrace {
    pub l1: FpPoly,
    pub l2: FpPoly,
    pub r1: FpPoly,
    pub r2: FpPoly,
    pub t: FpPoly,
    pub s_err: FpPoly,
    pub syndromes: Syndromes,
    /// Present when r₁ = 0 and s_err = 0.
    pub message: Option<Message>,
}

/// Result of single u-error correction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correction {
    pub word: Word,
    /// (position i, value γ) of the removed error u·γ·x^i; `None` when the
    /// word was already clean.
    pub error: Option<(usize, u32)>,
}

/// Distance used by the brute-force decoder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Hamming,
    Gray(usize),
}

impl SkewCyclicCode {
    /// Validates `form` against every clause of the classification.
    pub fn construct(aut: &Automorphism, n: usize, form: GeneratorForm) -> Result<Self> {
        if n == 0 {
            return Err(Error::LengthMismatch { expected: 1, got: 0 });
        }
        let field = *aut.field();
        let xn = FpPoly::x_n_minus_one(field, n);
        let check_abar = |abar: &FpPoly| -> Result<usize> {
            if abar.field() != field || !abar.is_monic() || !abar.divides(&xn) {
                return Err(Error::AbarNotDivisor);
            }
            Ok(abar.degree().expect("monic"))
        };
        let check_g = |g: &SkewPoly| -> Result<(usize, SkewPoly)> {
            if g.aut() != aut {
                return Err(Error::AutomorphismMismatch);
            }
            if !g.is_monic() || g.degree().expect("monic") > n {
                return Err(Error::GNotRightDivisor);
            }
            match g.right_divides_xn(n)? {
                Some(k) => Ok((g.degree().expect("monic"), k)),
                None => Err(Error::GNotRightDivisor),
            }
        };

        let (r, t, generator, cofactor) = match &form {
            GeneratorForm::NonMonic { abar } => {
                let t = check_abar(abar)?;
                (t, Some(t), None, None)
            }
            GeneratorForm::Monic { g } => {
                let (r, k) = check_g(g)?;
                (r, None, Some(g.clone()), Some(k))
            }
            GeneratorForm::Mixed { g, pp, abar } => {
                let (r, k) = check_g(g)?;
                let t = check_abar(abar)?;
                if pp.field() != field {
                    return Err(Error::AutomorphismMismatch);
                }
                if t >= r || pp.degree().is_some_and(|d| d >= r) {
                    return Err(Error::DegreeOrder);
                }
                if !abar.divides(&g.fp_part()) {
                    return Err(Error::AbarNotDividingGModU);
                }
                // k ∗ (u·pp) = u·k′·pp must lie in ⟨u·ā⟩
                let kp = k.partaker().mul(pp).reduce_cyclic(n);
                if !abar.divides(&kp) && !kp.is_zero() {
                    return Err(Error::MonicThreeConditionFailed);
                }
                let gen = g.add(&SkewPoly::u_times(aut, pp))?;
                (r, Some(t), Some(gen), Some(k))
            }
        };

        let mut code = SkewCyclicCode {
            aut: aut.clone(),
            n,
            form,
            r,
            t,
            generator,
            cofactor,
            syndrome_table: HashMap::new(),
        };
        code.syndrome_table = code.build_syndrome_table();
        Ok(code)
    }

    pub fn aut(&self) -> &Automorphism {
        &self.aut
    }

    pub fn field(&self) -> &PrimeField {
        self.aut.field()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn form(&self) -> &GeneratorForm {
        &self.form
    }

    /// Degree of the governing generator (ā in the nonmonic form, g otherwise).
    pub fn r(&self) -> usize {
        self.r
    }

    /// Degree of ā for the nonmonic and mixed forms.
    pub fn t(&self) -> Option<usize> {
        self.t
    }

    /// g + u·pp for the monic and mixed forms.
    pub fn generator(&self) -> Option<&SkewPoly> {
        self.generator.as_ref()
    }

    pub fn cofactor(&self) -> Option<&SkewPoly> {
        self.cofactor.as_ref()
    }

    pub fn abar(&self) -> Option<&FpPoly> {
        match &self.form {
            GeneratorForm::NonMonic { abar } | GeneratorForm::Mixed { abar, .. } => Some(abar),
            GeneratorForm::Monic { .. } => None,
        }
    }

    fn u_abar(&self) -> Option<SkewPoly> {
        self.abar().map(|a| SkewPoly::u_times(&self.aut, a))
    }

    /// Free rank n − r for the monic and mixed forms; zero for the nonmonic form.
    pub fn free_rank(&self) -> usize {
        match self.form {
            GeneratorForm::NonMonic { .. } => 0,
            _ => self.n - self.r,
        }
    }

    pub fn is_zero_code(&self) -> bool {
        self.fp_dimension() == 0
    }

    /// Minimal generating set over R[x;θ]; also the generator matrix over R.
    pub fn spanning_set(&self) -> Vec<Word> {
        let n = self.n;
        let mut rows = Vec::new();
        if let Some(g) = &self.generator {
            for i in 0..n - self.r {
                rows.push(g.x_pow_times(i).to_vector(n));
            }
        }
        if let Some(ua) = self.u_abar() {
            let count = match self.form {
                GeneratorForm::NonMonic { .. } => n - self.r,
                _ => self.r - self.t.expect("mixed has t"),
            };
            for i in 0..count {
                rows.push(ua.x_pow_times(i).to_vector(n));
            }
        }
        rows
    }

    /// A basis of C as an F_p-vector space inside R^n.
    pub fn fp_basis(&self) -> Vec<Word> {
        let n = self.n;
        let f = *self.field();
        let mut rows = Vec::new();
        if let Some(g) = &self.generator {
            for i in 0..n - self.r {
                let row = g.x_pow_times(i).to_vector(n);
                let urow = row.iter().map(|&c| f.r_mul(RingElement::U, c)).collect();
                rows.push(row);
                rows.push(urow);
            }
        }
        if let Some(ua) = self.u_abar() {
            let count = match self.form {
                GeneratorForm::NonMonic { .. } => n - self.r,
                _ => self.r - self.t.expect("mixed has t"),
            };
            for i in 0..count {
                rows.push(ua.x_pow_times(i).to_vector(n));
            }
        }
        rows
    }

    /// log_p |C|: 2(n − r) + (r − t) for the mixed form, and so on.
    pub fn fp_dimension(&self) -> usize {
        match self.form {
            GeneratorForm::NonMonic { .. } => self.n - self.r,
            GeneratorForm::Monic { .. } => 2 * (self.n - self.r),
            GeneratorForm::Mixed { .. } => 2 * (self.n - self.r) + self.r - self.t.expect("mixed"),
        }
    }

    /// |C|, or `None` if it does not fit in a u128.
    pub fn cardinality(&self) -> Option<u128> {
        (self.field().p() as u128).checked_pow(self.fp_dimension() as u32)
    }

    fn check_len(&self, v: &[RingElement]) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: v.len() });
        }
        Ok(())
    }

    pub fn contains(&self, v: &[RingElement]) -> Result<bool> {
        self.check_len(v)?;
        match self.recover_message(v) {
            Ok(_) => Ok(true),
            Err(Error::NotACodeword) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Encodes with the generator-form formula:
    /// u·i·ā, (i + uq) ∗ g, or (i + uq) ∗ (g + u pp) + u·j·ā.
    pub fn encode(&self, m: &Message) -> Result<Word> {
        let n = self.n;
        let bound = |part: &'static str, deg: Option<usize>, max: i64| -> Result<()> {
            match deg {
                Some(d) if d as i64 > max => Err(Error::MessageDegreeOverflow { part, degree: d, bound: max }),
                _ => Ok(()),
            }
        };
        let free_max = n as i64 - self.r as i64 - 1;
        let word = match (&self.form, m) {
            (GeneratorForm::NonMonic { abar }, Message::NonMonic { i }) => {
                bound("i", i.degree(), free_max)?;
                SkewPoly::u_times(&self.aut, &i.mul(abar))
            }
            (GeneratorForm::Monic { g }, Message::Monic { iq }) => {
                bound("i+uq", iq.degree(), free_max)?;
                iq.mul(g)?
            }
            (GeneratorForm::Mixed { abar, .. }, Message::Mixed { iq, j }) => {
                bound("i+uq", iq.degree(), free_max)?;
                let t = self.t.expect("mixed");
                bound("j", j.degree(), self.r as i64 - t as i64 - 1)?;
                let gen = self.generator.as_ref().expect("mixed");
                iq.mul(gen)?.add(&SkewPoly::u_times(&self.aut, &j.mul(abar)))?
            }
            _ => return Err(Error::MessageShape),
        };
        Ok(word.reduce_cyclic(n).to_vector(n))
    }

    /// Inverts [`encode`](Self::encode). Since encoded words have degree < n
    /// the quotient and remainder of one right division recover the message.
    pub fn recover_message(&self, c: &[RingElement]) -> Result<Message> {
        self.check_len(c)?;
        let v = SkewPoly::from_vector(&self.aut, c);
        match &self.form {
            GeneratorForm::NonMonic { abar } => {
                if !v.fp_part().is_zero() {
                    return Err(Error::NotACodeword);
                }
                let i = v.u_part().exact_div(abar).ok_or(Error::NotACodeword)?;
                Ok(Message::NonMonic { i })
            }
            GeneratorForm::Monic { g } => {
                let (q, r) = v.right_divide(g)?;
                if !r.is_zero() {
                    return Err(Error::NotACodeword);
                }
                Ok(Message::Monic { iq: q })
            }
            GeneratorForm::Mixed { abar, .. } => {
                let gen = self.generator.as_ref().expect("mixed");
                let (q, r) = v.right_divide(gen)?;
                if !r.fp_part().is_zero() {
                    return Err(Error::NotACodeword);
                }
                let j = r.u_part().exact_div(abar).ok_or(Error::NotACodeword)?;
                Ok(Message::Mixed { iq: q, j })
            }
        }
    }

    /// The ā used for the u-syndrome: ā itself, or g mod u for the monic form.
    fn syndrome_abar(&self) -> Option<FpPoly> {
        match &self.form {
            GeneratorForm::NonMonic { .. } => None,
            GeneratorForm::Monic { g } => Some(g.fp_part()),
            GeneratorForm::Mixed { abar, .. } => Some(abar.clone()),
        }
    }

    /// s₁ = v_F·(x^n − 1)/g₁ and s₂ = w·(x^n − 1)/ā, both mod x^n − 1 in F_p[x].
    ///
    /// `w` is the u-part of v − i∗(g + u pp) where i = ⌊v_F / g₁⌋, which
    /// removes the u-part a clean F_p-part forces through the generator.
    pub fn syndromes(&self, v: &[RingElement]) -> Result<Syndromes> {
        self.check_len(v)?;
        let abar = self.syndrome_abar().ok_or(Error::UnsupportedForm)?;
        let n = self.n;
        let field = *self.field();
        let xn = FpPoly::x_n_minus_one(field, n);
        let gen = self.generator.as_ref().expect("monic or mixed");
        let g1 = gen.fp_part();
        let k1 = xn.exact_div(&g1).expect("g mod u divides x^n - 1");
        let h = xn.exact_div(&abar).expect("abar divides x^n - 1");
        let poly = SkewPoly::from_vector(&self.aut, v);
        let v_fp = poly.fp_part();
        let s1 = v_fp.mul(&k1).reduce_cyclic(n);
        let (i, _) = v_fp.div_rem(&g1)?;
        let forced = SkewPoly::from_fp(&self.aut, &i).mul(gen)?;
        let w = poly.sub(&forced)?.u_part();
        let s2 = w.mul(&h).reduce_cyclic(n);
        Ok(Syndromes { s1, s2 })
    }

    fn build_syndrome_table(&self) -> HashMap<FpPoly, Vec<(usize, u32)>> {
        let mut table: HashMap<FpPoly, Vec<(usize, u32)>> = HashMap::new();
        let Some(abar) = self.syndrome_abar() else {
            return table;
        };
        let field = *self.field();
        let n = self.n;
        let h = FpPoly::x_n_minus_one(field, n).exact_div(&abar).expect("abar divides");
        for i in 0..n {
            let base = h.shift(i).reduce_cyclic(n);
            for gamma in 1..field.p() {
                table.entry(base.scale(gamma)).or_default().push((i, gamma));
            }
        }
        table
    }

    /// Single-u-error syndrome table entries matching `s2`.
    pub fn syndrome_matches(&self, s2: &FpPoly) -> &[(usize, u32)] {
        self.syndrome_table.get(s2).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Removes a single error of the form u·γ·x^i when the syndromes
    /// identify it uniquely.
    pub fn correct_single_u_error(&self, v: &[RingElement]) -> Result<Correction> {
        let syn = self.syndromes(v)?;
        if !syn.s1.is_zero() {
            return Err(Error::Uncorrectable);
        }
        if syn.s2.is_zero() {
            return Ok(Correction { word: v.to_vec(), error: None });
        }
        match self.syndrome_matches(&syn.s2) {
            [(i, gamma)] => {
                let f = self.field();
                let mut word = v.to_vec();
                word[*i] = f.r_sub(word[*i], RingElement::new(0, *gamma));
                Ok(Correction { word, error: Some((*i, *gamma)) })
            }
            _ => Err(Error::Uncorrectable),
        }
    }

    /// Division-based decoding with all intermediate values exposed.
    pub fn decode_trace(&self, v: &[RingElement]) -> Result<DecodingTrace> {
        self.check_len(v)?;
        let abar = self.syndrome_abar().ok_or(Error::UnsupportedForm)?;
        let gen = self.generator.as_ref().expect("monic or mixed");
        let poly = SkewPoly::from_vector(&self.aut, v);
        let (q, r) = poly.right_divide(gen)?;
        let (l1, l2) = (q.fp_part(), q.u_part());
        let (r1, r2) = (r.fp_part(), r.u_part());
        let (t, s_err) = r2.div_rem(&abar)?;
        let syndromes = self.syndromes(v)?;
        let message = (r1.is_zero() && s_err.is_zero()).then(|| match &self.form {
            GeneratorForm::Mixed { .. } => Message::Mixed { iq: q.clone(), j: t.clone() },
            _ => Message::Monic { iq: q.clone() },
        });
        Ok(DecodingTrace { l1, l2, r1, r2, t, s_err, syndromes, message })
    }

    /// Iterates over every codeword (F_p-span of [`fp_basis`](Self::fp_basis)).
    pub fn codewords(&self, limit: u128) -> Result<Vec<Word>> {
        let size = self.cardinality().unwrap_or(u128::MAX);
        if size > limit {
            return Err(Error::ClosureTooLarge { size, limit });
        }
        Ok(span_words(*self.field(), self.n, &self.fp_basis()))
    }

    /// Brute-force nearest codeword. Returns the first closest codeword in
    /// enumeration order, its distance and whether it is the unique closest.
    pub fn nearest_codeword(&self, v: &[RingElement], metric: Metric) -> Result<(Word, usize, bool)> {
        self.check_len(v)?;
        let f = *self.field();
        let dist = |c: &Word| -> Result<usize> {
            let mut d = 0;
            for (&x, &y) in c.iter().zip(v) {
                let diff = f.r_sub(x, y);
                d += match metric {
                    Metric::Hamming => usize::from(!diff.is_zero()),
                    Metric::Gray(ell) => crate::gray::gray_weight(&f, ell, diff)?,
                };
            }
            Ok(d)
        };
        let mut best: Option<(Word, usize, bool)> = None;
        for c in self.codewords(ENUMERATION_LIMIT)? {
            let d = dist(&c)?;
            match &mut best {
                Some((_, bd, unique)) if d == *bd => *unique = false,
                Some((_, bd, _)) if d > *bd => {}
                _ => best = Some((c, d, true)),
            }
        }
        Ok(best.expect("code contains zero"))
    }

    /// Rows spanning the dual code {y : Σ cᵢyᵢ = 0 in R for all c ∈ C},
    /// reduced to a minimal generating set over R.
    pub fn check_matrix(&self) -> Vec<Word> {
        let n = self.n;
        let f = *self.field();
        // u-part of Σ cᵢyᵢ is Σ aᵢdᵢ + bᵢc′ᵢ; closure under u makes it sufficient.
        let eqs: Vec<Vec<u32>> = self
            .fp_basis()
            .iter()
            .map(|c| {
                let mut row = vec![0u32; 2 * n];
                for (i, e) in c.iter().enumerate() {
                    row[i] = e.b;
                    row[n + i] = e.a;
                }
                row
            })
            .collect();
        let dual = nullspace(f, 2 * n, &eqs);
        let mut span = Echelon::new(f, 2 * n);
        let mut out = Vec::new();
        for y in dual {
            let word: Word = (0..n).map(|i| RingElement::new(y[i], y[n + i])).collect();
            let flat = |w: &Word| -> Vec<u32> { w.iter().map(|e| e.a).chain(w.iter().map(|e| e.b)).collect() };
            if span.contains(&flat(&word)) {
                continue;
            }
            let mut w = word.clone();
            for _ in 0..2 {
                span.insert(flat(&w));
                w = w.iter().map(|&c| f.r_mul(RingElement::U, c)).collect();
            }
            out.push(word);
        }
        out
    }
}

impl fmt::Debug for SkewCyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewCyclicCode(n={}, {:?}, {})", self.n, self.aut, self)
    }
}

impl fmt::Display for SkewCyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::text::{format_fp_polynomial, format_polynomial};
        match &self.form {
            GeneratorForm::NonMonic { abar } => write!(f, "<u*({})>", format_fp_polynomial(abar)),
            GeneratorForm::Monic { g } => write!(f, "<{}>", format_polynomial(g)),
            GeneratorForm::Mixed { abar, .. } => write!(
                f,
                "<{}, u*({})>",
                format_polynomial(self.generator.as_ref().expect("mixed")),
                format_fp_polynomial(abar)
            ),
        }
    }
}

/// R-inner product Σ xᵢyᵢ.
pub fn inner_product(field: &PrimeField, x: &[RingElement], y: &[RingElement]) -> RingElement {
    x.iter().zip(y).fold(RingElement::ZERO, |acc, (&a, &b)| field.r_add(acc, field.r_mul(a, b)))
}

/// x ∗ c mod (x^n − 1): (θ(c_{n−1}), θ(c₀), …, θ(c_{n−2})).
pub fn skew_shift(aut: &Automorphism, c: &[RingElement]) -> Word {
    let n = c.len();
    (0..n).map(|i| aut.apply(1, c[(i + n - 1) % n])).collect()
}

/// Every F_p-combination of `basis`.
pub fn span_words(field: PrimeField, n: usize, basis: &[Word]) -> Vec<Word> {
    let mut out = vec![vec![RingElement::ZERO; n]];
    for b in basis {
        let mut next = Vec::with_capacity(out.len() * field.p() as usize);
        for w in &out {
            for k in 0..field.p() {
                next.push(w.iter().zip(b).map(|(&x, &y)| field.r_add(x, field.r_scale(k, y))).collect());
            }
        }
        out = next;
    }
    out
}

// Coordinates of R^n as F_p^{2n}, highest degree first so that the echelon
// pivot of a vector sits at its leading coefficient: a_{n−1}, b_{n−1}, a_{n−2}, …
fn to_leading_flat(w: &[RingElement]) -> Vec<u32> {
    let n = w.len();
    let mut v = vec![0u32; 2 * n];
    for (d, e) in w.iter().enumerate() {
        v[2 * (n - 1 - d)] = e.a;
        v[2 * (n - 1 - d) + 1] = e.b;
    }
    v
}

fn from_leading_flat(v: &[u32]) -> Word {
    let n = v.len() / 2;
    (0..n).map(|d| RingElement::new(v[2 * (n - 1 - d)], v[2 * (n - 1 - d) + 1])).collect()
}

/// The smallest F_p-subspace containing `generators` and closed under the
/// skew shift and multiplication by u, in reduced echelon form.
pub fn closure(aut: &Automorphism, n: usize, generators: &[Word]) -> Result<Echelon> {
    let f = *aut.field();
    let mut span = Echelon::new(f, 2 * n);
    let mut queue: Vec<Word> = Vec::new();
    for g in generators {
        if g.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: g.len() });
        }
        queue.push(g.iter().map(|c| RingElement::new(c.a % f.p(), c.b % f.p())).collect());
    }
    while let Some(w) = queue.pop() {
        if span.insert(to_leading_flat(&w)) {
            queue.push(skew_shift(aut, &w));
            queue.push(w.iter().map(|&c| f.r_mul(RingElement::U, c)).collect());
        }
    }
    Ok(span)
}

/// Determines the generator form of the submodule generated by `generators`.
pub fn canonicalize(aut: &Automorphism, n: usize, generators: &[Word]) -> Result<SkewCyclicCode> {
    canonicalize_capped(aut, n, generators, CLOSURE_LIMIT)
}

pub fn canonicalize_capped(
    aut: &Automorphism,
    n: usize,
    generators: &[Word],
    limit: u128,
) -> Result<SkewCyclicCode> {
    let field = *aut.field();
    let span = closure(aut, n, generators)?;
    let size = (field.p() as u128).checked_pow(span.rank() as u32).unwrap_or(u128::MAX);
    if size > limit {
        return Err(Error::ClosureTooLarge { size, limit });
    }
    if span.rank() == 0 {
        let abar = FpPoly::x_n_minus_one(field, n);
        return SkewCyclicCode::construct(aut, n, GeneratorForm::NonMonic { abar });
    }
    let degree_of = |piv: usize| n - 1 - piv / 2;
    let is_unit_pivot = |piv: usize| piv.is_multiple_of(2);

    // Pivots are sorted ascending, i.e. by descending degree; scan from the end.
    let rows = span.rows();
    let pivots = span.pivots();
    let min_idx = pivots.len() - 1;
    let monic_idx = (0..pivots.len()).rev().find(|&i| is_unit_pivot(pivots[i]));
    let normalize = |w: Word| -> SkewPoly {
        let poly = SkewPoly::from_vector(aut, &w);
        let inv = field.r_inv(poly.leading()).expect("unit leading coefficient");
        poly.scale_left(inv)
    };
    let form = match monic_idx {
        None => {
            let a = SkewPoly::from_vector(aut, &from_leading_flat(&rows[min_idx]));
            GeneratorForm::NonMonic { abar: a.u_part().monic() }
        }
        Some(mi) if degree_of(pivots[mi]) == degree_of(pivots[min_idx]) => GeneratorForm::Monic { g: normalize(from_leading_flat(&rows[mi])) },
        Some(mi) => {
            debug_assert!(degree_of(pivots[mi]) > degree_of(pivots[min_idx]));
            let big = normalize(from_leading_flat(&rows[mi]));
            let a = SkewPoly::from_vector(aut, &from_leading_flat(&rows[min_idx]));
            GeneratorForm::Mixed {
                g: SkewPoly::from_fp(aut, &big.fp_part()),
                pp: big.u_part(),
                abar: a.u_part().monic(),
            }
        }
    };
    let code = SkewCyclicCode::construct(aut, n, form)?;
    debug_assert_eq!(code.fp_dimension(), span.rank());
    Ok(code)
}

/// Every code of length n in each generator form: all ⟨u·ā⟩, all free
/// ⟨g₁ + u·l⟩, and all valid ⟨g + u·pp, u·ā⟩ over those g. Meant for small n.
pub fn enumerate_codes(aut: &Automorphism, n: usize) -> Result<Vec<SkewCyclicCode>> {
    let field = *aut.field();
    let divs = monic_divisors(&factor_xn_minus_1(field, n))?;
    let mut out = Vec::new();
    let mut monic = Vec::new();
    for d in &divs {
        out.push(SkewCyclicCode::construct(aut, n, GeneratorForm::NonMonic { abar: d.clone() })?);
        for g in lift_divisors(d, n, aut)?.generators(aut) {
            monic.push(g.clone());
            out.push(SkewCyclicCode::construct(aut, n, GeneratorForm::Monic { g })?);
        }
    }
    for g in &monic {
        let r = g.degree().expect("monic");
        let g1 = SkewPoly::from_fp(aut, &g.fp_part());
        // g₁ + u·pp ranges over all lifts as pp ranges over F_p[x]_{<r}
        if g1 != *g {
            continue;
        }
        for idx in 0..(field.p() as u64).pow(r as u32) {
            let pp = index_to_poly(field, idx, r);
            for abar in divs.iter().filter(|d| d.degree().expect("monic") < r) {
                let form = GeneratorForm::Mixed { g: g.clone(), pp: pp.clone(), abar: abar.clone() };
                if let Ok(c) = SkewCyclicCode::construct(aut, n, form) {
                    out.push(c);
                }
            }
        }
    }
    Ok(out)
}
