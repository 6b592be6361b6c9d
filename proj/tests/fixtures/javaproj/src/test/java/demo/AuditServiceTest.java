package demo;

import java.util.ArrayList;
import java.util.Collection;
import java.util.List;

public class AuditServiceTest {
    private List<AuditRequestLog> sample() {
        List<AuditRequestLog> logs = new ArrayList<AuditRequestLog>();
        logs.add(new AuditRequestLog("/a", 200));
        logs.add(new AuditRequestLog("/b", 404));
        logs.add(new AuditRequestLog("/c", 500));
        return logs;
    }

    public void testGetAuditRequestLogsReturnsSaved() {
        AuditRepository repo = new AuditRepository();
        repo.save(new AuditRequestLog("/x", 200));
        repo.save(new AuditRequestLog("/y", 201));
        Collection<AuditRequestLog> logs = new AuditService(repo).getAuditRequestLogs();
        Check.equal(new Integer(2), new Integer(logs.size()));
    }

    public void testCountFailures() {
        AuditService service = new AuditService(new AuditRepository());
        Check.equal(new Integer(2), new Integer(service.countFailures(sample())));
    }

    public void testCountFailuresEmpty() {
        AuditService service = new AuditService(new AuditRepository());
        Check.equal(new Integer(0), new Integer(service.countFailures(new ArrayList<AuditRequestLog>())));
    }

    public void testSummary() {
        AuditService service = new AuditService(new AuditRepository());
        Check.equal("logs=3", service.summary(sample()));
    }

    public void testFailedPaths() {
        AuditService service = new AuditService(new AuditRepository());
        List<String> paths = service.failedPaths(sample());
        Check.equal(new Integer(2), new Integer(paths.size()));
        Check.equal("/b", paths.get(0));
    }
}
