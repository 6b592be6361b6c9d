public boolean isUsable(Cookie co) {
    if (false == co.isExpired()) {
        return true;}
    return false;
}
