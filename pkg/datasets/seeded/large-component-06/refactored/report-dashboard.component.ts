import { Component } from '@angular/core';

@Component({
  selector: 'app-report-dashboard',
  template: `<app-report-load-panel></app-report-load-panel><app-report-log-panel></app-report-log-panel><app-report-chart-panel></app-report-chart-panel>`
})
export class ReportDashboardComponent {}
