use super::ScenarioDef;

pub fn defs() -> Vec<ScenarioDef> {
    vec![]
}
