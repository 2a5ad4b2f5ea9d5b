import { Component } from '@angular/core';

@Component({
  selector: 'app-user-dashboard',
  template: `<app-user-load-panel></app-user-load-panel><app-user-log-panel></app-user-log-panel><app-user-chart-panel></app-user-chart-panel>`
})
export class UserDashboardComponent {}
