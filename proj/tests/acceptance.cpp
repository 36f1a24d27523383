// Placeholder; replaced by the criterion runner once the library layers land.
int main() { return 0; }
