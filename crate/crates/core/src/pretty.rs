use crate::term::Term;

/// Prints `t` with `\` binders and the fewest parentheses the grammar allows.
pub fn pretty(t: &Term) -> String {
    let mut out = String::new();
    write_term(t, &mut out);
    out
}

fn write_term(t: &Term, out: &mut String) {
    match t {
        Term::Var(x) => out.push_str(x.as_str()),
        Term::Lam(x, body) => {
            out.push('\\');
            out.push_str(x.as_str());
            out.push('.');
            write_term(body, out);
        }
        Term::App(f, a) => {
            if matches!(**f, Term::Lam(..)) {
                parenthesized(f, out);
            } else {
                write_term(f, out);
            }
            out.push(' ');
            if matches!(**a, Term::Var(_)) {
                write_term(a, out);
            } else {
                parenthesized(a, out);
            }
        }
    }
}

fn parenthesized(t: &Term, out: &mut String) {
    out.push('(');
    write_term(t, out);
    out.push(')');
}
