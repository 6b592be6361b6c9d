public Set<String> collectConditionKeys(List<Condition> conditions) {
    Set<String> conditionKeys = new HashSet<>();
    for (Condition condition : conditions) {
        conditionKeys.add(condition.getKey());
    }
    return conditionKeys;
}
