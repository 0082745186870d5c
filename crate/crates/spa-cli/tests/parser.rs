//! Parser unit tests: diagnostics, grammar rules, and the render/parse
//! round trip.

use spa_cli::{parse_problem, parse_problem_unchecked, render_problem, FrontendError};

const QPLANE: &str = "field QQ;\ngens x:1 y:1;\nrel y*x = 2*x*y;\norder deglex x<y;\nmodule rank 2 shifts [0,1] order TOP;\nelems [x^2, 0] [x*y + y^2, 0];\n";

#[test]
fn well_formed_quantum_plane_file() {
    let problem = parse_problem(QPLANE).unwrap();
    assert_eq!(problem.algebra.generator_count(), 2);
    assert_eq!(problem.module.rank(), 2);
    assert_eq!(problem.elements.len(), 2);
    let (scalar, tail) = problem.algebra.relation(1, 0);
    assert!(tail.is_zero());
    assert_eq!(scalar.to_string(), "2");
}

#[test]
fn relations_must_put_the_later_generator_first() {
    let text = "field QQ;\ngens x y;\nrel x*y = 2*x*y;\n";
    match parse_problem(text) {
        Err(FrontendError::Syntax { line, message, .. }) => {
            assert_eq!(line, 3);
            assert!(message.contains("a_j*a_i"));
        }
        other => panic!("expected a syntax error, got {other:?}"),
    }
}

#[test]
fn zero_weights_are_rejected() {
    let text = "field QQ;\ngens x:0 y:1;\n";
    match parse_problem(text) {
        Err(FrontendError::Syntax { line, message, .. }) => {
            assert_eq!(line, 2);
            assert!(message.contains("positive"));
        }
        other => panic!("expected a syntax error, got {other:?}"),
    }
}

#[test]
fn unknown_generators_carry_their_location() {
    let text = "field QQ;\ngens x y;\nelems [x*w];\n";
    match parse_problem(text) {
        Err(FrontendError::UnknownSymbol { line, name, .. }) => {
            assert_eq!(line, 3);
            assert_eq!(name, "w");
        }
        other => panic!("expected an unknown-symbol error, got {other:?}"),
    }
}

#[test]
fn out_of_order_monomials_are_rejected() {
    let text = "field QQ;\ngens x y;\nelems [y*x];\n";
    assert!(matches!(parse_problem(text), Err(FrontendError::Syntax { line: 3, .. })));
}

#[test]
fn wrong_shift_count_is_rejected() {
    let text = "field QQ;\ngens x y;\nmodule rank 2 shifts [0] order TOP;\n";
    assert!(matches!(parse_problem(text), Err(FrontendError::Syntax { .. })));
}

#[test]
fn wrong_component_count_is_rejected() {
    let text = "field QQ;\ngens x y;\nmodule rank 2 shifts [0,0] order TOP;\nelems [x];\n";
    assert!(matches!(parse_problem(text), Err(FrontendError::Syntax { .. })));
}

#[test]
fn validation_failures_surface_as_such() {
    let text = "field QQ;\ngens x y;\nrel y*x = x^2;\n";
    // λ = 0: constructable, not solvable.
    assert!(parse_problem_unchecked(text).is_ok());
    assert!(matches!(parse_problem(text), Err(FrontendError::Validation { .. })));
}

#[test]
fn prime_field_literals_reduce() {
    let text = "field GF(7);\ngens x y;\nelems [10*x + 1/3*y];\n";
    let problem = parse_problem(text).unwrap();
    let rendered = problem.elements[0].render(&problem.module);
    assert_eq!(rendered, "[3*x + 5*y]");
}

#[test]
fn composite_moduli_are_rejected() {
    let text = "field GF(6);\ngens x;\n";
    assert!(matches!(parse_problem(text), Err(FrontendError::Syntax { .. })));
}

#[test]
fn render_parse_round_trip() {
    for text in [
        QPLANE,
        "field GF(32003);\ngens a:2 b:3;\nrel b*a = 5*a*b + 17*a*b;\norder degrevlex b<a;\nelems [a^3 - b^2];\ntruncate 7;\n",
    ] {
        let problem = parse_problem_unchecked(text).unwrap();
        let rendered = render_problem(&problem);
        let reparsed = parse_problem_unchecked(&rendered).unwrap();
        assert_eq!(*reparsed.algebra, *problem.algebra);
        assert_eq!(*reparsed.module, *problem.module);
        assert_eq!(reparsed.elements, problem.elements);
        assert_eq!(reparsed.truncate, problem.truncate);
        // Rendering is idempotent on canonical files.
        assert_eq!(render_problem(&reparsed), rendered);
    }
}

#[test]
fn comments_and_whitespace_are_ignored"() {
    let text = "# leading comment\nfield QQ;   # trailing\n\n\ngens x \t y;\nelems [ x + y ];\n";
    assert!(parse_problem(text).is_ok());
}
