import { Component } from '@angular/core';

@Component({
  selector: 'app-account-dashboard',
  template: `<app-account-load-panel></app-account-load-panel><app-account-log-panel></app-account-log-panel><app-account-chart-panel></app-account-chart-panel>`
})
export class AccountDashboardComponent {}
