//! Lowers instances into natural-language step programs or Python-code
//! baseline prompts.
//!
//! Templates live in `templates/<task_id>.<mode>.tmpl` at the repository
//! root and are embedded into the binary; a directory override is available
//! for experimentation. The placeholder grammar is `{{name}}` with values
//! computed from the instance payload (scalars, indexed-array expansions,
//! matrix expansions and the seeded first computation line); see
//! `templates/README.md`.

mod values;

use serde::{Deserialize, Serialize};

use crate::catalog::{Instance, Payload, TaskId, KEYWORDS};
use crate::error::{Error, Result};

/// Rendering mode: natural-language step program or Python-code baseline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PromptMode {
    Nl,
    Code,
}

impl PromptMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            PromptMode::Nl => "nl",
            PromptMode::Code => "code",
        }
    }

    pub fn parse(s: &str) -> Result<PromptMode> {
        match s {
            "nl" => Ok(PromptMode::Nl),
            "code" => Ok(PromptMode::Code),
            other => Err(Error::BadManifest(format!("unknown mode `{other}`"))),
        }
    }
}

impl std::fmt::Display for PromptMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The exact text sent to a model plus its generation controls.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RenderedPrompt {
    pub task_id: TaskId,
    pub mode: PromptMode,
    /// Full prompt text ending with the divider, the numbering cue and the
    /// seeded first computation line.
    pub body: String,
    /// Strings that terminate generation.
    pub stop_tokens: Vec<String>,
    /// Phrases the instruction forbids in the output.
    pub banned_phrases: Vec<String>,
    pub max_response_tokens: u32,
}

macro_rules! embed {
    ($($name:literal),* $(,)?) => {
        &[ $( ($name, include_str!(concat!("../../../../templates/", $name, ".tmpl"))) ),* ]
    };
}

static EMBEDDED: &[(&str, &str)] = embed![
    "insertion_sort.nl",
    "insertion_sort.code",
    "bubble_sort.nl",
    "bubble_sort.code",
    "heapsort.nl",
    "heapsort.code",
    "quicksort.nl",
    "quicksort.code",
    "minimum.nl",
    "minimum.code",
    "binary_search.nl",
    "binary_search.code",
    "quickselect.nl",
    "quickselect.code",
    "maximum_subarray.nl",
    "maximum_subarray.code",
    "activity_selection.nl",
    "activity_selection.code",
    "task_scheduling.nl",
    "task_scheduling.code",
    "matrix_chain_multiplication.nl",
    "matrix_chain_multiplication.code",
    "lcs.nl",
    "lcs.code",
    "optimal_bst.nl",
    "optimal_bst.code",
    "depth_first_search.nl",
    "depth_first_search.code",
    "breadth_first_search.nl",
    "breadth_first_search.code",
    "topological_sort.nl",
    "topological_sort.code",
    "articulation_points.nl",
    "articulation_points.code",
    "bridges.nl",
    "bridges.code",
    "strongly_connected_components.nl",
    "strongly_connected_components.code",
    "mst_kruskal.nl",
    "mst_kruskal.code",
    "mst_prim.nl",
    "mst_prim.code",
    "bellman_ford.nl",
    "bellman_ford.code",
    "dijkstra.nl",
    "dijkstra.code",
    "floyd_warshall.nl",
    "floyd_warshall.code",
    "naive_string_matcher.nl",
    "naive_string_matcher.code",
    "kmp_matcher.nl",
    "kmp_matcher.code",
    "least_square_regression.nl",
    "least_square_regression.code",
    "discrete_fourier_transform.nl",
    "discrete_fourier_transform.code",
    "graham_scan.nl",
    "graham_scan.code",
    "jarvis_march.nl",
    "jarvis_march.code",
    "valid_parentheses.nl",
    "valid_parentheses.code",
    "keyword_iteration.nl",
];

/// Template source: the embedded set, optionally overridden from a
/// directory with the `templates/<task_id>.<mode>.tmpl` layout.
#[derive(Debug, Clone, Default)]
pub struct TemplateSet {
    overrides: std::collections::BTreeMap<String, String>,
}

impl TemplateSet {
    /// The embedded templates.
    pub fn embedded() -> Self {
        Self::default()
    }

    /// Loads `*.tmpl` files from `dir` on top of the embedded set.
    pub fn with_dir(dir: &std::path::Path) -> Result<Self> {
        let mut overrides = std::collections::BTreeMap::new();
        for entry in std::fs::read_dir(dir)? {
            let path = entry?.path();
            if path.extension().and_then(|e| e.to_str()) == Some("tmpl") {
                let stem = path.file_stem().unwrap().to_string_lossy().to_string();
                overrides.insert(stem, std::fs::read_to_string(&path)?);
            }
        }
        Ok(Self { overrides })
    }

    fn lookup(&self, task: TaskId, mode: PromptMode) -> Option<&str> {
        let key = format!("{}.{}", task.as_str(), mode.as_str());
        if let Some(text) = self.overrides.get(&key) {
            return Some(text);
        }
        EMBEDDED
            .iter()
            .find(|(name, _)| *name == key)
            .map(|(_, text)| *text)
    }

    /// Renders the natural-language step program for `instance`.
    pub fn render_nl(&self, instance: &Instance) -> Result<RenderedPrompt> {
        self.render(instance, PromptMode::Nl)
    }

    /// Renders the Python-code baseline prompt for `instance`. The keyword
    /// task has no code analogue.
    pub fn render_code(&self, instance: &Instance) -> Result<RenderedPrompt> {
        self.render(instance, PromptMode::Code)
    }

    pub fn render(&self, instance: &Instance, mode: PromptMode) -> Result<RenderedPrompt> {
        let task = instance.task_id;
        if task == TaskId::KeywordIteration {
            if mode == PromptMode::Code {
                return Err(Error::NoTemplate { task, mode: "code" });
            }
            let Payload::Keyword { word, iterations } = &instance.payload else {
                return Err(Error::MalformedPayload {
                    task,
                    reason: "keyword payload expected".to_string(),
                });
            };
            return self.render_keyword_task(word, *iterations);
        }
        let template = self.lookup(task, mode).ok_or(Error::NoTemplate {
            task,
            mode: mode.as_str(),
        })?;
        let vars = values::build(task, mode, &instance.payload)?;
        let body = substitute(template, &vars, task, mode)?;
        Ok(RenderedPrompt {
            task_id: task,
            mode,
            body,
            stop_tokens: stop_tokens(task),
            banned_phrases: banned_phrases(task, mode),
            max_response_tokens: max_tokens(instance.size),
        })
    }

    /// Renders the iterative sentence-generation prompt for one of the 20
    /// admitted keywords and an iteration count in `{5,10,15,20,25}`.
    pub fn render_keyword_task(&self, keyword: &str, iterations: usize) -> Result<RenderedPrompt> {
        if !KEYWORDS.contains(&keyword) {
            return Err(Error::KeywordGrid(format!("unknown keyword `{keyword}`")));
        }
        if !matches!(iterations, 5 | 10 | 15 | 20 | 25) {
            return Err(Error::KeywordGrid(format!(
                "iteration count {iterations} not in {{5,10,15,20,25}}"
            )));
        }
        let task = TaskId::KeywordIteration;
        let template = self.lookup(task, PromptMode::Nl).ok_or(Error::NoTemplate {
            task,
            mode: "nl",
        })?;
        let vars = vec![
            ("keyword".to_string(), keyword.to_string()),
            ("iterations".to_string(), iterations.to_string()),
        ];
        let body = substitute(template, &vars, task, PromptMode::Nl)?;
        Ok(RenderedPrompt {
            task_id: task,
            mode: PromptMode::Nl,
            body,
            stop_tokens: vec![],
            banned_phrases: vec![],
            max_response_tokens: max_tokens(iterations),
        })
    }
}

/// Renders with the embedded templates.
pub fn render_nl(instance: &Instance) -> Result<RenderedPrompt> {
    TemplateSet::embedded().render_nl(instance)
}

/// Renders the code baseline with the embedded templates.
pub fn render_code(instance: &Instance) -> Result<RenderedPrompt> {
    TemplateSet::embedded().render_code(instance)
}

/// Renders the keyword task with the embedded templates.
pub fn render_keyword_task(keyword: &str, iterations: usize) -> Result<RenderedPrompt> {
    TemplateSet::embedded().render_keyword_task(keyword, iterations)
}

fn substitute(
    template: &str,
    vars: &[(String, String)],
    task: TaskId,
    mode: PromptMode,
) -> Result<String> {
    let mut body = template.trim_end_matches('\n').to_string();
    for (key, value) in vars {
        body = body.replace(&format!("{{{{{key}}}}}"), value);
    }
    if let Some(pos) = body.find("{{") {
        let end = body[pos..].find("}}").map(|e| pos + e + 2).unwrap_or(body.len());
        return Err(Error::UnsubstitutedPlaceholder {
            task,
            mode: mode.as_str(),
            leftover: body[pos..end].to_string(),
        });
    }
    Ok(body)
}

fn stop_tokens(task: TaskId) -> Vec<String> {
    match task {
        TaskId::ValidParentheses => vec!["halt".to_string()],
        _ => vec![],
    }
}

fn banned_phrases(task: TaskId, mode: PromptMode) -> Vec<String> {
    // only prompts that declare the prohibition carry it
    match (task, mode) {
        (TaskId::Lcs, PromptMode::Nl) => {
            vec!["...".to_string(), "Repeat".to_string(), "Continue".to_string()]
        }
        _ => vec![],
    }
}

/// Conservative response budgets: small instances stay within a 4k window,
/// the longer ones get the 8k-window budget.
fn max_tokens(size: usize) -> u32 {
    if size <= 5 {
        3000
    } else {
        6000
    }
}
