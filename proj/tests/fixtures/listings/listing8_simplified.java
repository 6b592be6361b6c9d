public int findProduct(List<Integer> numbers, Map<Integer, Integer> map) {
    for(Integer currentNum : numbers) {
        Integer otherNum = map.get(2020 - currentNum);
        if (otherNum != null) {
            System.out.println("this num = " + currentNum);
            System.out.println("other num = " + otherNum);
            int result = otherNum * currentNum;
            System.out.println("result = " + result);
            return result;    } }
    return -1;
}
