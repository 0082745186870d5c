//! The `.spa` problem-file parser.
//!
//! One problem per file, statements terminated by `;`, `#` comments to end of
//! line:
//!
//! ```text
//! field QQ;                      # or GF(p)
//! gens x:1 y:1;                  # name:weight, weight defaults to 1
//! rel y*x = 2*x*y;               # higher generator first on the left
//! order deglex x<y;              # or degrevlex; chain lists ascending precedence
//! module rank 2 shifts [0,1] order TOP;   # optional; default rank 1, shift 0, TOP
//! elems [x^2, 0] [x*y + y^2, 0];
//! truncate 3;                    # optional task parameter
//! ```
//!
//! Monomials are written in PBW form: generator factors in ascending order.
//! The parser normalizes whitespace, not mathematics; the one exception is
//! the relation left side, which must be exactly `a_j * a_i` with `j > i`.

use std::fmt;
use std::sync::Arc;

use spa_core::{
    Coefficient, FieldSpec, GradedFreeModule, ModuleElement, ModuleOrdering, Monomial,
    OrderingFamily, OrderingSpec, Polynomial, RelationSpec, SolvableAlgebra, ValidationReport,
};

/// Term list carried before the algebra (and its ordering) exists.
type RawTerms = Vec<(Coefficient, Monomial)>;

/// A parsed and constructed problem.
#[derive(Debug, Clone)]
pub struct ProblemFile {
    pub algebra: Arc<SolvableAlgebra>,
    pub module: Arc<GradedFreeModule>,
    pub elements: Vec<ModuleElement>,
    pub truncate: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrontendError {
    Syntax { line: usize, col: usize, message: String },
    UnknownSymbol { line: usize, col: usize, name: String },
    Validation { report: ValidationReport },
    Io(String),
}

impl fmt::Display for FrontendError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrontendError::Syntax { line, col, message } => {
                write!(f, "syntax error at {line}:{col}: {message}")
            }
            FrontendError::UnknownSymbol { line, col, name } => {
                write!(f, "unknown symbol `{name}` at {line}:{col}")
            }
            FrontendError::Validation { report } => {
                writeln!(f, "validation failed:")?;
                write!(f, "{report}")
            }
            FrontendError::Io(message) => write!(f, "{message}"),
        }
    }
}

impl std::error::Error for FrontendError {}

type PResult<T> = std::result::Result<T, FrontendError>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> PResult<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
                col += 1;
            }
        } else if c.is_ascii_digit() {
            let (start_line, start_col) = (line, col);
            let mut value = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    value.push(c);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            tokens.push(Token { tok: Tok::Int(value), line: start_line, col: start_col });
        } else if c.is_alphabetic() || c == '_' {
            let (start_line, start_col) = (line, col);
            let mut name = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_alphanumeric() || c == '_' {
                    name.push(c);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            tokens.push(Token { tok: Tok::Ident(name), line: start_line, col: start_col });
        } else if "*^+-=<,;[]()/:".contains(c) {
            tokens.push(Token { tok: Tok::Sym(c), line, col });
            chars.next();
            col += 1;
        } else {
            return Err(FrontendError::Syntax {
                line,
                col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn here(&self) -> (usize, usize) {
        match self.tokens.get(self.pos).or_else(|| self.tokens.last()) {
            Some(t) => (t.line, t.col),
            None => (1, 1),
        }
    }

    fn syntax<T>(&self, message: impl Into<String>) -> PResult<T> {
        let (line, col) = self.here();
        Err(FrontendError::Syntax { line, col, message: message.into() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_sym(&mut self, c: char) -> PResult<()> {
        match self.peek() {
            Some(Tok::Sym(s)) if *s == c => {
                self.pos += 1;
                Ok(())
            }
            _ => self.syntax(format!("expected `{c}`")),
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if matches!(self.peek(), Some(Tok::Sym(s)) if *s == c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_ident(&mut self) -> PResult<(String, usize, usize)> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token { tok: Tok::Ident(name), line, col }) => {
                self.pos += 1;
                Ok((name, line, col))
            }
            _ => self.syntax("expected an identifier"),
        }
    }

    fn expect_keyword(&mut self, word: &str) -> PResult<()> {
        match self.peek() {
            Some(Tok::Ident(name)) if name == word => {
                self.pos += 1;
                Ok(())
            }
            _ => self.syntax(format!("expected `{word}`")),
        }
    }

    fn expect_nat(&mut self) -> PResult<u64> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token { tok: Tok::Int(digits), line, col }) => {
                self.pos += 1;
                digits.parse().map_err(|_| FrontendError::Syntax {
                    line,
                    col,
                    message: format!("integer `{digits}` out of range"),
                })
            }
            _ => self.syntax("expected an integer"),
        }
    }
}

#[derive(Default)]
struct Draft {
    field: Option<FieldSpec>,
    gens: Vec<(String, u64)>,
    relations: Vec<(usize, usize, RawTerms, usize, usize)>,
    ordering: Option<(OrderingFamily, Vec<usize>)>,
    module: Option<(u64, Vec<u64>, ModuleOrdering)>,
    elements: Vec<Vec<RawTerms>>,
    truncate: Option<u64>,
}

impl Draft {
    fn field(&self, p: &Parser) -> PResult<FieldSpec> {
        match self.field {
            Some(f) => Ok(f),
            None => p.syntax("a `field` statement must precede this statement"),
        }
    }

    fn gen_index(&self, name: &str, line: usize, col: usize) -> PResult<usize> {
        self.gens
            .iter()
            .position(|(n, _)| n == name)
            .ok_or(FrontendError::UnknownSymbol { line, col, name: name.to_string() })
    }
}

/// Parses one polynomial in PBW written form into a raw term list.
fn parse_poly(p: &mut Parser, draft: &Draft) -> PResult<RawTerms> {
    let field = draft.field(p)?;
    let mut terms: RawTerms = Vec::new();
    let mut negate = p.eat_sym('-');
    loop {
        let (coeff, mono) = parse_term(p, draft, &field)?;
        let coeff = if negate { coeff.neg() } else { coeff };
        terms.push((coeff, mono));
        if p.eat_sym('+') {
            negate = false;
        } else if p.eat_sym('-') {
            negate = true;
        } else {
            break;
        }
    }
    Ok(terms)
}

fn parse_term(p: &mut Parser, draft: &Draft, field: &FieldSpec) -> PResult<(Coefficient, Monomial)> {
    let n = draft.gens.len();
    let mut coeff = field.one();
    let mut exps = vec![0u32; n];
    let mut last_index: Option<usize> = None;
    loop {
        match p.tokens.get(p.pos).cloned() {
            Some(Token { tok: Tok::Int(digits), line, col }) => {
                p.pos += 1;
                let mut literal = digits;
                if p.eat_sym('/') {
                    let denom = match p.next() {
                        Some(Token { tok: Tok::Int(d), .. }) => d,
                        _ => return p.syntax("expected a denominator"),
                    };
                    literal = format!("{literal}/{denom}");
                }
                let value = field.parse(&literal).map_err(|e| FrontendError::Syntax {
                    line,
                    col,
                    message: e.to_string(),
                })?;
                coeff = coeff.checked_mul(&value).unwrap();
            }
            Some(Token { tok: Tok::Ident(name), line, col }) => {
                p.pos += 1;
                let index = draft.gen_index(&name, line, col)?;
                if last_index.is_some_and(|prev| index < prev) {
                    return Err(FrontendError::Syntax {
                        line,
                        col,
                        message: format!(
                            "generator `{name}` out of PBW order; write factors in ascending generator order"
                        ),
                    });
                }
                last_index = Some(index);
                let power = if p.eat_sym('^') { p.expect_nat()? } else { 1 };
                let power = u32::try_from(power).map_err(|_| FrontendError::Syntax {
                    line,
                    col,
                    message: "exponent out of range".into(),
                })?;
                exps[index] += power;
            }
            _ => return p.syntax("expected a coefficient or generator"),
        }
        if !p.eat_sym('*') {
            break;
        }
    }
    Ok((coeff, Monomial::new(exps)))
}

fn parse_statement(p: &mut Parser, draft: &mut Draft) -> PResult<()> {
    let (word, line, col) = p.expect_ident()?;
    match word.as_str() {
        "field" => {
            if draft.field.is_some() {
                return p.syntax("duplicate `field` statement");
            }
            let (name, line, col) = p.expect_ident()?;
            let field = match name.as_str() {
                "QQ" => FieldSpec::Rationals,
                "GF" => {
                    p.expect_sym('(')?;
                    let modulus = p.expect_nat()?;
                    p.expect_sym(')')?;
                    FieldSpec::prime_field(modulus).map_err(|e| FrontendError::Syntax {
                        line,
                        col,
                        message: e.to_string(),
                    })?
                }
                other => {
                    return Err(FrontendError::Syntax {
                        line,
                        col,
                        message: format!("unknown field `{other}`; expected QQ or GF(p)"),
                    })
                }
            };
            draft.field = Some(field);
        }
        "gens" => {
            if !draft.gens.is_empty() {
                return p.syntax("duplicate `gens` statement");
            }
            while let Some(Tok::Ident(_)) = p.peek() {
                let (name, line, col) = p.expect_ident()?;
                if draft.gens.iter().any(|(n, _)| n == &name) {
                    return Err(FrontendError::Syntax {
                        line,
                        col,
                        message: format!("duplicate generator `{name}`"),
                    });
                }
                let weight = if p.eat_sym(':') { p.expect_nat()? } else { 1 };
                if weight == 0 {
                    return Err(FrontendError::Syntax {
                        line,
                        col,
                        message: "weights must be positive (a positive-degree function)".into(),
                    });
                }
                draft.gens.push((name, weight));
            }
            if draft.gens.is_empty() {
                return p.syntax("`gens` needs at least one generator");
            }
        }
        "rel" => {
            let (left, lline, lcol) = p.expect_ident()?;
            let j = draft.gen_index(&left, lline, lcol)?;
            p.expect_sym('*')?;
            let (right, rline, rcol) = p.expect_ident()?;
            let i = draft.gen_index(&right, rline, rcol)?;
            if j <= i {
                return Err(FrontendError::Syntax {
                    line: lline,
                    col: lcol,
                    message: "relations must rewrite a_j*a_i with j declared after i".into(),
                });
            }
            p.expect_sym('=')?;
            let rhs = parse_poly(p, draft)?;
            if draft.relations.iter().any(|&(rj, ri, ..)| rj == j && ri == i) {
                return Err(FrontendError::Syntax {
                    line: lline,
                    col: lcol,
                    message: format!("duplicate relation for {left}*{right}"),
                });
            }
            draft.relations.push((j, i, rhs, lline, lcol));
        }
        "order" => {
            if draft.ordering.is_some() {
                return p.syntax("duplicate `order` statement");
            }
            let (family_name, fline, fcol) = p.expect_ident()?;
            let family = match family_name.as_str() {
                "deglex" => OrderingFamily::DegLex,
                "degrevlex" => OrderingFamily::DegRevLex,
                other => {
                    return Err(FrontendError::Syntax {
                        line: fline,
                        col: fcol,
                        message: format!("unknown ordering family `{other}`"),
                    })
                }
            };
            let mut chain = Vec::new();
            let (first, line, col) = p.expect_ident()?;
            chain.push(draft.gen_index(&first, line, col)?);
            while p.eat_sym('<') {
                let (name, line, col) = p.expect_ident()?;
                chain.push(draft.gen_index(&name, line, col)?);
            }
            if chain.len() != draft.gens.len() || {
                let mut sorted = chain.clone();
                sorted.sort_unstable();
                sorted.dedup();
                sorted.len() != draft.gens.len()
            } {
                return Err(FrontendError::Syntax {
                    line: fline,
                    col: fcol,
                    message: "the precedence chain must mention every generator exactly once".into(),
                });
            }
            draft.ordering = Some((family, chain));
        }
        "module" => {
            if draft.module.is_some() {
                return p.syntax("duplicate `module` statement");
            }
            p.expect_keyword("rank")?;
            let rank = p.expect_nat()?;
            p.expect_keyword("shifts")?;
            p.expect_sym('[')?;
            let mut shifts = Vec::new();
            if !matches!(p.peek(), Some(Tok::Sym(']'))) {
                shifts.push(p.expect_nat()?);
                while p.eat_sym(',') {
                    shifts.push(p.expect_nat()?);
                }
            }
            p.expect_sym(']')?;
            if shifts.len() as u64 != rank {
                return Err(FrontendError::Syntax {
                    line,
                    col,
                    message: format!("rank {rank} needs {rank} shifts, got {}", shifts.len()),
                });
            }
            p.expect_keyword("order")?;
            let (kind, kline, kcol) = p.expect_ident()?;
            let ordering = match kind.as_str() {
                "TOP" => ModuleOrdering::Top,
                "POT" => ModuleOrdering::Pot,
                other => {
                    return Err(FrontendError::Syntax {
                        line: kline,
                        col: kcol,
                        message: format!("unknown module ordering `{other}`; expected TOP or POT"),
                    })
                }
            };
            draft.module = Some((rank, shifts, ordering));
        }
        "elems" => {
            if !draft.elements.is_empty() {
                return p.syntax("duplicate `elems` statement");
            }
            while p.eat_sym('[') {
                let mut components = Vec::new();
                if matches!(p.peek(), Some(Tok::Sym(']'))) {
                    return p.syntax("an element needs at least one component");
                }
                loop {
                    if matches!(p.peek(), Some(Tok::Int(d)) if d == "0")
                        && matches!(p.tokens.get(p.pos + 1).map(|t| &t.tok), Some(Tok::Sym(',')) | Some(Tok::Sym(']')))
                    {
                        p.pos += 1;
                        components.push(Vec::new());
                    } else {
                        components.push(parse_poly(p, draft)?);
                    }
                    if !p.eat_sym(',') {
                        break;
                    }
                }
                p.expect_sym(']')?;
                draft.elements.push(components);
            }
            if draft.elements.is_empty() {
                return p.syntax("`elems` needs at least one bracketed vector");
            }
        }
        "truncate" => {
            if draft.truncate.is_some() {
                return p.syntax("duplicate `truncate` statement");
            }
            draft.truncate = Some(p.expect_nat()?);
        }
        other => {
            return Err(FrontendError::Syntax {
                line,
                col,
                message: format!("unknown statement `{other}`"),
            })
        }
    }
    p.expect_sym(';')
}

/// Parses and constructs the problem without running the validation checks.
pub fn parse_problem_unchecked(text: &str) -> PResult<ProblemFile> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, pos: 0 };
    let mut draft = Draft::default();
    while parser.peek().is_some() {
        parse_statement(&mut parser, &mut draft)?;
    }
    let field = match draft.field {
        Some(f) => f,
        None => return parser.syntax("missing `field` statement"),
    };
    if draft.gens.is_empty() {
        return parser.syntax("missing `gens` statement");
    }
    let n = draft.gens.len();
    let names: Vec<String> = draft.gens.iter().map(|(n, _)| n.clone()).collect();
    let weights: Vec<u64> = draft.gens.iter().map(|(_, w)| *w).collect();
    let ordering = match draft.ordering.clone() {
        Some((family, precedence)) => OrderingSpec::new(family, precedence)
            .map_err(|e| FrontendError::Syntax { line: 1, col: 1, message: e.to_string() })?,
        None => OrderingSpec::default_for(OrderingFamily::DegLex, n),
    };
    let mut relations = Vec::new();
    for (j, i, rhs, line, col) in &draft.relations {
        // Split the right side into λ·a_i a_j + tail.
        let product = Monomial::generator(n, *i).mul(&Monomial::generator(n, *j));
        let mut scalar = field.zero();
        let mut tail = Vec::new();
        for (c, m) in rhs {
            if m == &product {
                scalar = scalar.checked_add(c).map_err(|e| FrontendError::Syntax {
                    line: *line,
                    col: *col,
                    message: e.to_string(),
                })?;
            } else {
                tail.push((c.clone(), m.clone()));
            }
        }
        relations.push(RelationSpec { higher: *j, lower: *i, scalar, tail });
    }
    let algebra = SolvableAlgebra::new(names, weights, field, ordering, relations)
        .map_err(|e| FrontendError::Syntax { line: 1, col: 1, message: e.to_string() })?;
    let algebra = Arc::new(algebra);
    let (rank, shifts, module_ordering) = draft
        .module
        .unwrap_or((1, vec![0], ModuleOrdering::Top));
    let module = GradedFreeModule::new(algebra.clone(), shifts, module_ordering)
        .map_err(|e| FrontendError::Syntax { line: 1, col: 1, message: e.to_string() })?;
    let mut elements = Vec::new();
    for components in &draft.elements {
        if components.len() as u64 != rank {
            return Err(FrontendError::Syntax {
                line: 1,
                col: 1,
                message: format!(
                    "element has {} components but the module has rank {rank}",
                    components.len()
                ),
            });
        }
        // Canonicalize each component against the real algebra.
        let mut canonical = Vec::new();
        for terms in components {
            canonical.push(
                Polynomial::from_terms(terms.clone(), &algebra).map_err(|e| {
                    FrontendError::Syntax { line: 1, col: 1, message: e.to_string() }
                })?,
            );
        }
        elements.push(
            ModuleElement::from_components(&canonical, &module).map_err(|e| {
                FrontendError::Syntax { line: 1, col: 1, message: e.to_string() }
            })?,
        );
    }
    Ok(ProblemFile { algebra, module, elements, truncate: draft.truncate })
}

/// Parses, constructs and validates: `check_solvable` and `check_graded` must
/// both pass.
pub fn parse_problem(text: &str) -> PResult<ProblemFile> {
    let problem = parse_problem_unchecked(text)?;
    let report = problem.algebra.validate();
    if !report.is_valid() {
        return Err(FrontendError::Validation { report });
    }
    Ok(problem)
}

/// Canonical rendering; `parse_problem(render_problem(p))` reconstructs `p`.
pub fn render_problem(problem: &ProblemFile) -> String {
    let algebra = &problem.algebra;
    let mut out = String::new();
    out.push_str(&format!("field {};\n", algebra.field()));
    let gens: Vec<String> = algebra
        .names()
        .iter()
        .zip(algebra.weights())
        .map(|(n, w)| format!("{n}:{w}"))
        .collect();
    out.push_str(&format!("gens {};\n", gens.join(" ")));
    let n = algebra.generator_count();
    for j in 1..n {
        for i in 0..j {
            let (scalar, tail) = algebra.relation(j, i);
            if scalar.is_one() && tail.is_zero() {
                continue;
            }
            let product = Monomial::generator(n, i).mul(&Monomial::generator(n, j));
            let rhs = Polynomial::monomial(scalar, product)
                .add(&tail, algebra)
                .expect("canonical relation");
            out.push_str(&format!(
                "rel {}*{} = {};\n",
                algebra.generator_name(j),
                algebra.generator_name(i),
                rhs.render(algebra)
            ));
        }
    }
    let chain: Vec<&str> = algebra
        .ordering()
        .precedence
        .iter()
        .map(|&v| algebra.generator_name(v))
        .collect();
    out.push_str(&format!("order {} {};\n", algebra.ordering().family, chain.join("<")));
    let module = &problem.module;
    let ordering_name = match module.ordering() {
        ModuleOrdering::Top => "TOP",
        ModuleOrdering::Pot => "POT",
        ModuleOrdering::Schreyer(_) => "TOP",
    };
    let shifts: Vec<String> = module.shifts().iter().map(|s| s.to_string()).collect();
    out.push_str(&format!(
        "module rank {} shifts [{}] order {};\n",
        module.rank(),
        shifts.join(","),
        ordering_name
    ));
    if !problem.elements.is_empty() {
        let rendered: Vec<String> =
            problem.elements.iter().map(|e| render_element(e, module)).collect();
        out.push_str(&format!("elems {};\n", rendered.join(" ")));
    }
    if let Some(n0) = problem.truncate {
        out.push_str(&format!("truncate {n0};\n"));
    }
    out
}

fn render_element(element: &ModuleElement, module: &GradedFreeModule) -> String {
    let comps: Vec<String> = element
        .components(module)
        .iter()
        .map(|p| p.render(module.algebra()))
        .collect();
    format!("[{}]", comps.join(", "))
}
