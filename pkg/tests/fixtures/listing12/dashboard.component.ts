import { Component, OnInit } from '@angular/core';
import { LogService, User, UserService } from './services';

@Component({
  selector: 'app-dashboard',
  templateUrl: './dashboard.component.html'
})
export class DashboardComponent implements OnInit {
  users: User[] = [];
  logs: string[] = [];
  chartData: number[] = [];

  constructor(private userService: UserService, private logService: LogService) {}

  ngOnInit() {
    this.loadUsers();
    this.loadLogs();
    this.generateChartData();
  }

  loadUsers() { /* ... */ }
  loadLogs() { /* ... */ }
  generateChartData() { /* ... */ }
}
