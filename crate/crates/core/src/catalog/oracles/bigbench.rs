//! The two benchmark-comparison tasks.

use crate::catalog::StepTrace;
use crate::value::{Answer, Validity};

/// Stack matcher over three bracket types.
pub fn valid_parentheses(chars: &str) -> (Answer, StepTrace) {
    let mut stack: Vec<char> = Vec::new();
    for c in chars.chars() {
        match c {
            '(' | '[' | '{' => stack.push(c),
            _ => {
                let Some(open) = stack.pop() else {
                    return (Answer::Label(Validity::Invalid), vec![]);
                };
                let matched = matches!((open, c), ('(', ')') | ('[', ']') | ('{', '}'));
                if !matched {
                    return (Answer::Label(Validity::Invalid), vec![]);
                }
            }
        }
    }
    let verdict = if stack.is_empty() {
        Validity::Valid
    } else {
        Validity::Invalid
    };
    (Answer::Label(verdict), vec![])
}

/// The keyword task is generative: the gold "answer" is the number of
/// iterations a structurally valid response must complete. Responses are
/// judged on structure only (sentence contains the keyword, a single-word
/// keyword is handed to the next iteration).
pub fn keyword(iterations: usize) -> (Answer, StepTrace) {
    (Answer::Int(iterations as i64), vec![])
}
